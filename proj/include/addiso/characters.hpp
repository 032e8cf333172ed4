#pragma once

#include <cstdint>
#include <vector>

#include "addiso/codes.hpp"
#include "addiso/kspace.hpp"

namespace addiso {

/// Exact rational with canonical sign and lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Element of Q(zeta_p) in the canonical basis 1, zeta, ..., zeta^(p-2): the
/// stored coefficient of zeta^(p-1) is always zero after reduction via
/// 1 + zeta + ... + zeta^(p-1) = 0.
struct CycloRat {
    uint32_t p = 2;
    std::vector<Rational> c;  // length p, c[p-1] == 0 in canonical form

    friend bool operator==(const CycloRat&, const CycloRat&) = default;
};

CycloRat cyclo_zero(uint32_t p);
CycloRat cyclo_rational(uint32_t p, Rational r);
CycloRat zeta_pow(uint32_t p, uint64_t e);
CycloRat cyclo_add(const CycloRat& a, const CycloRat& b);
CycloRat cyclo_sub(const CycloRat& a, const CycloRat& b);
CycloRat cyclo_mul(const CycloRat& a, const CycloRat& b);
CycloRat cyclo_scale(Rational r, const CycloRat& a);
bool cyclo_is_rational(const CycloRat& a);
Rational cyclo_as_rational(const CycloRat& a);

/// chi_v(u) = zeta_p ^ tr(twist * <v, u>), the additive character of K^k
/// attached to v through the standard bilinear form and the trace character.
/// The twist selects among the nontrivial characters of K; 1 is the default.
CycloRat char_value(const FieldK& f, const KVec& v, const KVec& u);
CycloRat char_value_twisted(const FieldK& f, KElem twist, const KVec& v, const KVec& u);

/// (1/|L|) sum over b in L of chi_b(a) equals 1 - wt(a), evaluated exactly.
bool coordinate_weight_identity(const FieldL& field, LElem a);
bool coordinate_weight_identity_twisted(const FieldL& field, KElem twist, LElem a);

/// wt(A^T u) = m - sum_v (sum_i |V_i|^(-1) 1_{V_i}(v)) chi_v(u), exactly.
bool weight_representation_check(const GenMatrix& a, const KVec& u);
bool weight_representation_check_twisted(const GenMatrix& a, KElem twist, const KVec& u);

}  // namespace addiso
