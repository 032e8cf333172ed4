#include "addiso/characters.hpp"

#include <numeric>
#include <string>

#include "addiso/solutions.hpp"

namespace addiso {

namespace {

constexpr uint32_t kMaxCycloPrime = 13;

void check_prime(uint32_t p) {
    if (p > kMaxCycloPrime) fail(Errc::TooLarge, "cyclotomic order above 13 is not supported");
    bool prime = p >= 2;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
    if (!prime) fail(Errc::NonPrime, "cyclotomic order must be prime");
}

long long checked_mul(long long a, long long b) {
    __int128 r = __int128(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) fail(Errc::TooLarge, "rational overflow");
    return (long long)r;
}

// subtract c[p-1] from every coordinate; zeta^(p-1) = -(1 + zeta + ...)
void canonicalize(CycloRat& a) {
    Rational top = a.c[a.p - 1];
    if (top == Rational{}) return;
    for (uint32_t i = 0; i < a.p; ++i) a.c[i] = a.c[i] - top;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(Rational a, Rational b) {
    return Rational(checked_mul(a.num, b.den) + checked_mul(b.num, a.den), checked_mul(a.den, b.den));
}

Rational operator-(Rational a, Rational b) {
    return Rational(checked_mul(a.num, b.den) - checked_mul(b.num, a.den), checked_mul(a.den, b.den));
}

Rational operator*(Rational a, Rational b) {
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

CycloRat cyclo_zero(uint32_t p) {
    check_prime(p);
    return CycloRat{p, std::vector<Rational>(p)};
}

CycloRat cyclo_rational(uint32_t p, Rational r) {
    CycloRat a = cyclo_zero(p);
    a.c[0] = r;
    return a;
}

CycloRat zeta_pow(uint32_t p, uint64_t e) {
    CycloRat a = cyclo_zero(p);
    a.c[e % p] = Rational(1);
    canonicalize(a);
    return a;
}

CycloRat cyclo_add(const CycloRat& a, const CycloRat& b) {
    if (a.p != b.p) fail(Errc::DimensionMismatch, "cyclotomic orders differ");
    CycloRat r = a;
    for (uint32_t i = 0; i < a.p; ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

CycloRat cyclo_sub(const CycloRat& a, const CycloRat& b) {
    if (a.p != b.p) fail(Errc::DimensionMismatch, "cyclotomic orders differ");
    CycloRat r = a;
    for (uint32_t i = 0; i < a.p; ++i) r.c[i] = r.c[i] - b.c[i];
    return r;
}

CycloRat cyclo_mul(const CycloRat& a, const CycloRat& b) {
    if (a.p != b.p) fail(Errc::DimensionMismatch, "cyclotomic orders differ");
    CycloRat r = cyclo_zero(a.p);
    for (uint32_t i = 0; i < a.p; ++i) {
        if (a.c[i] == Rational{}) continue;
        for (uint32_t j = 0; j < b.p; ++j) {
            uint32_t k = (i + j) % a.p;
            r.c[k] = r.c[k] + a.c[i] * b.c[j];
        }
    }
    canonicalize(r);
    return r;
}

CycloRat cyclo_scale(Rational s, const CycloRat& a) {
    CycloRat r = a;
    for (uint32_t i = 0; i < a.p; ++i) r.c[i] = s * r.c[i];
    return r;
}

bool cyclo_is_rational(const CycloRat& a) {
    for (uint32_t i = 1; i < a.p; ++i)
        if (!(a.c[i] == Rational{})) return false;
    return true;
}

Rational cyclo_as_rational(const CycloRat& a) {
    if (!cyclo_is_rational(a)) fail(Errc::Verification, "cyclotomic value is not rational");
    return a.c[0];
}

CycloRat char_value_twisted(const FieldK& f, KElem twist, const KVec& v, const KVec& u) {
    if (v.size() != u.size()) fail(Errc::DimensionMismatch, "character arguments have different lengths");
    check_prime(f.p());
    KElem dot = f.zero();
    for (size_t i = 0; i < v.size(); ++i) dot = f.add(dot, f.mul(v[i], u[i]));
    return zeta_pow(f.p(), f.abs_trace(f.mul(twist, dot)));
}

CycloRat char_value(const FieldK& f, const KVec& v, const KVec& u) {
    return char_value_twisted(f, f.one(), v, u);
}

bool coordinate_weight_identity_twisted(const FieldL& field, KElem twist, LElem a) {
    const FieldK& kf = field.subfield();
    check_prime(kf.p());
    auto ca = field.coords(a);
    CycloRat sum = cyclo_zero(kf.p());
    for (uint64_t b = 0; b < field.size(); ++b) {
        auto cb = field.coords({uint32_t(b)});
        sum = cyclo_add(sum, char_value_twisted(kf, twist, cb, ca));
    }
    Rational expected(field.is_zero(a) ? 1 : 0);
    CycloRat lhs = cyclo_scale(Rational(1, (long long)field.size()), sum);
    return lhs == cyclo_rational(kf.p(), expected);
}

bool coordinate_weight_identity(const FieldL& field, LElem a) {
    return coordinate_weight_identity_twisted(field, field.subfield().one(), a);
}

bool weight_representation_check_twisted(const GenMatrix& a, KElem twist, const KVec& u) {
    const FieldL& field = a.field();
    const FieldK& kf = field.subfield();
    check_prime(kf.p());
    if (u.size() != a.k()) fail(Errc::DimensionMismatch, "argument length differs from the code dimension");

    IndicatorTable table = indicator_table(kf, space_tuple(a));
    uint64_t qk = table.values.size();

    CycloRat sum = cyclo_zero(kf.p());
    for (uint64_t vi = 0; vi < qk; ++vi) {
        if (table.values[vi] == 0) continue;
        KVec v = point_from_index(kf, a.k(), vi);
        CycloRat term = cyclo_scale(Rational((long long)table.values[vi], (long long)qk),
                                    char_value_twisted(kf, twist, v, u));
        sum = cyclo_add(sum, term);
    }
    CycloRat rhs = cyclo_sub(cyclo_rational(kf.p(), Rational((long long)a.m())), sum);
    LWord w = codeword_at(a, point_index(kf, u));
    return rhs == cyclo_rational(kf.p(), Rational((long long)weight(field, w)));
}

bool weight_representation_check(const GenMatrix& a, const KVec& u) {
    return weight_representation_check_twisted(a, a.field().subfield().one(), u);
}

}  // namespace addiso
