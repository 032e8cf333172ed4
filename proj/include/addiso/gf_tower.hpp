#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "addiso/errors.hpp"

namespace addiso {

// Elements are stored by their enumeration index: the element with index v has
// coefficient digits of v (least significant digit = coefficient of degree 0).
// Index order therefore coincides with the canonical enumeration order.
struct KElem {
    uint32_t v = 0;
    friend constexpr auto operator<=>(KElem, KElem) = default;
};

struct LElem {
    uint32_t v = 0;
    friend constexpr auto operator<=>(LElem, LElem) = default;
};

class PrimeField {
  public:
    using Elem = uint32_t;

    explicit PrimeField(uint32_t p);

    uint32_t p() const { return p_; }
    uint64_t size() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const;
    bool is_zero(Elem a) const { return a == 0; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  private:
    uint32_t p_;
};

/// The field K = GF(p^d), realized as F_p[x]/(g) for a monic irreducible g.
class FieldK {
  public:
    using Elem = KElem;

    FieldK(PrimeField base, std::vector<uint32_t> modulus);
    static FieldK with_default_modulus(PrimeField base, uint32_t degree);

    uint32_t p() const { return base_.p(); }
    uint32_t degree() const { return d_; }
    uint64_t size() const { return q_; }
    const PrimeField& prime_field() const { return base_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    KElem zero() const { return {0}; }
    KElem one() const { return {1}; }
    KElem element(uint64_t index) const;
    bool is_zero(KElem a) const { return a.v == 0; }

    /// F_p coefficients of a, low degree first; length degree().
    std::vector<uint32_t> coeffs(KElem a) const;
    KElem from_coeffs(std::span<const uint32_t> c) const;

    KElem add(KElem a, KElem b) const;
    KElem sub(KElem a, KElem b) const;
    KElem neg(KElem a) const;
    KElem mul(KElem a, KElem b) const;
    KElem inv(KElem a) const;
    KElem pow(KElem a, uint64_t e) const;

    /// Absolute trace K -> F_p, as a value in [0, p).
    uint32_t abs_trace(KElem a) const;

    std::vector<KElem> elements() const;

    friend bool operator==(const FieldK& a, const FieldK& b) {
        return a.base_ == b.base_ && a.mod_ == b.mod_;
    }

  private:
    struct Tables;
    PrimeField base_;
    uint32_t d_;
    uint64_t q_;
    std::vector<uint32_t> mod_;
    std::shared_ptr<const Tables> tab_;

    KElem add_slow(KElem, KElem) const;
    KElem mul_slow(KElem, KElem) const;
    void build_tables();
};

/// The field L, a degree-n extension K[y]/(h) of K. L-elements carry their
/// K-coordinates in the basis 1, alpha, ..., alpha^(n-1) directly.
class FieldL {
  public:
    using Elem = LElem;

    FieldL(FieldK subfield, std::vector<KElem> modulus);
    static FieldL with_default_modulus(FieldK subfield, uint32_t degree);

    const FieldK& subfield() const { return k_; }
    uint32_t degree() const { return n_; }
    uint64_t size() const { return size_; }
    const std::vector<KElem>& modulus() const { return mod_; }

    LElem zero() const { return {0}; }
    LElem one() const { return {1}; }
    LElem element(uint64_t index) const;
    bool is_zero(LElem a) const { return a.v == 0; }

    LElem embed(KElem a) const;
    bool in_subfield(LElem a) const { return a.v < k_.size(); }
    KElem to_subfield(LElem a) const;

    /// K-coordinates of a in the power basis, length degree().
    std::vector<KElem> coords(LElem a) const;
    LElem from_coords(std::span<const KElem> c) const;

    LElem add(LElem a, LElem b) const;
    LElem sub(LElem a, LElem b) const;
    LElem neg(LElem a) const;
    LElem mul(LElem a, LElem b) const;
    LElem inv(LElem a) const;
    LElem pow(LElem a, uint64_t e) const;
    LElem scalar_mul(KElem c, LElem a) const;

    std::vector<LElem> elements() const;

    friend bool operator==(const FieldL& a, const FieldL& b) {
        return a.k_ == b.k_ && a.mod_ == b.mod_;
    }

  private:
    struct Tables;
    FieldK k_;
    uint32_t n_;
    uint64_t size_;
    std::vector<KElem> mod_;
    std::shared_ptr<const Tables> tab_;

    LElem mul_slow(LElem, LElem) const;
    void build_tables();
};

/// Builds the pair K = GF(p^d) inside L = GF(q^n). Omitted moduli select the
/// lexicographically smallest monic irreducible of the required degree.
FieldL make_field_pair(uint32_t p, uint32_t d, uint32_t n,
                       std::optional<std::vector<uint32_t>> modulus_g = std::nullopt,
                       std::optional<std::vector<KElem>> modulus_h = std::nullopt);

// Irreducibility by exhaustive trial division; f is a monic coefficient
// sequence, low degree first, of degree >= 1.
bool is_irreducible(const PrimeField& f, std::span<const uint32_t> poly);
bool is_irreducible(const FieldK& f, std::span<const KElem> poly);

std::vector<uint32_t> default_modulus_over_prime(const PrimeField& f, uint32_t degree);
std::vector<KElem> default_modulus_over_k(const FieldK& f, uint32_t degree);

}  // namespace addiso
