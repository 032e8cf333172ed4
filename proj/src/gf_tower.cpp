#include "addiso/gf_tower.hpp"

#include <algorithm>
#include <string>

namespace addiso {

namespace {

constexpr uint32_t kMaxPrime = 251;
constexpr uint64_t kMaxFieldSize = uint64_t{1} << 20;
constexpr uint64_t kTableCap = 512;  // lookup tables only for small fields

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (r > cap / base) fail(Errc::TooLarge, "field size exceeds the supported bound");
        r *= base;
    }
    return r;
}

// Index <-> digit codecs. Digit i is the coefficient of degree i; the low
// digit is least significant in the index.
template <class D>
void idx_to_digits(uint64_t v, uint64_t base, std::span<D> out) {
    for (auto& d : out) {
        d = D(v % base);
        v /= base;
    }
}

uint32_t elem_from_index(const PrimeField&, uint64_t i) { return uint32_t(i); }
KElem elem_from_index(const FieldK&, uint64_t i) { return KElem{uint32_t(i)}; }

// Dense polynomial helpers over an arbitrary coefficient field F. Leading
// zeros are allowed; deg() ignores them.
template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
int poly_deg(const F& f, const Poly<F>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (!f.is_zero(a[i])) return i;
    return -1;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(a.size() + b.size(), f.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

// Remainder of a modulo a monic divisor.
template <class F>
void poly_rem_monic(const F& f, Poly<F>& a, const Poly<F>& mod, int mod_deg) {
    for (int i = int(a.size()) - 1; i >= mod_deg; --i) {
        if (f.is_zero(a[i])) continue;
        auto c = a[i];
        a[i] = f.zero();
        for (int j = 0; j < mod_deg; ++j)
            a[i - mod_deg + j] = f.sub(a[i - mod_deg + j], f.mul(c, mod[j]));
    }
    a.resize(size_t(mod_deg), f.zero());
}

template <class F>
bool poly_irreducible(const F& f, std::span<const typename F::Elem> poly) {
    int deg = -1;
    for (int i = int(poly.size()) - 1; i >= 0; --i)
        if (!f.is_zero(poly[i])) {
            deg = i;
            break;
        }
    if (deg < 1) fail(Errc::DegreeMismatch, "irreducibility test needs degree >= 1");
    if (!(poly[size_t(deg)] == f.one())) fail(Errc::DegreeMismatch, "polynomial must be monic");

    Poly<F> target(poly.begin(), poly.begin() + deg + 1);
    for (int e = 1; e <= deg / 2; ++e) {
        uint64_t count = checked_pow(f.size(), uint32_t(e), kMaxFieldSize);
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly<F> div(size_t(e) + 1, f.zero());
            uint64_t v = idx;
            for (int i = 0; i < e; ++i) {
                div[size_t(i)] = elem_from_index(f, v % f.size());
                v /= f.size();
            }
            div[size_t(e)] = f.one();
            Poly<F> rem = target;
            poly_rem_monic(f, rem, div, e);
            if (poly_deg(f, rem) < 0) return false;
        }
    }
    return true;
}

template <class F>
std::vector<typename F::Elem> default_modulus(const F& f, uint32_t degree) {
    if (degree < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
    uint64_t count = checked_pow(f.size(), degree, kMaxFieldSize);
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<typename F::Elem> cand(degree + 1, f.zero());
        uint64_t v = idx;
        for (uint32_t i = 0; i < degree; ++i) {
            cand[i] = elem_from_index(f, v % f.size());
            v /= f.size();
        }
        cand[degree] = f.one();
        if (poly_irreducible(f, std::span<const typename F::Elem>(cand))) return cand;
    }
    // Unreachable: an irreducible of every degree exists over a finite field.
    fail(Errc::Reducible, "no irreducible modulus found");
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p > kMaxPrime) fail(Errc::TooLarge, "prime modulus " + std::to_string(p) + " exceeds 251");
    if (!is_prime_u32(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    // Fermat: a^(p-2)
    uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return Elem(r);
}

// ---------------------------------------------------------------------------
// FieldK

struct FieldK::Tables {
    std::vector<uint32_t> add, mul, neg, inv, trace;
};

FieldK::FieldK(PrimeField base, std::vector<uint32_t> modulus) : base_(base), mod_(std::move(modulus)) {
    if (mod_.size() < 2) fail(Errc::DegreeMismatch, "modulus must have degree >= 1");
    for (uint32_t c : mod_)
        if (c >= base_.p()) fail(Errc::DegreeMismatch, "modulus coefficient out of range");
    if (mod_.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
    d_ = uint32_t(mod_.size() - 1);
    q_ = checked_pow(base_.p(), d_, kMaxFieldSize);
    if (!is_irreducible(base_, std::span<const uint32_t>(mod_)))
        fail(Errc::Reducible, "modulus is reducible over the prime field");
    build_tables();
}

FieldK FieldK::with_default_modulus(PrimeField base, uint32_t degree) {
    return FieldK(base, default_modulus_over_prime(base, degree));
}

KElem FieldK::element(uint64_t index) const {
    if (index >= q_) fail(Errc::TooLarge, "element index out of range");
    return {uint32_t(index)};
}

std::vector<uint32_t> FieldK::coeffs(KElem a) const {
    std::vector<uint32_t> c(d_);
    idx_to_digits<uint32_t>(a.v, base_.p(), c);
    return c;
}

KElem FieldK::from_coeffs(std::span<const uint32_t> c) const {
    if (c.size() != d_) fail(Errc::DegreeMismatch, "coefficient sequence has wrong length");
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= base_.p()) fail(Errc::DegreeMismatch, "coefficient out of range");
        v = v * base_.p() + c[i];
    }
    return {uint32_t(v)};
}

KElem FieldK::add_slow(KElem a, KElem b) const {
    uint64_t va = a.v, vb = b.v, r = 0, m = 1;
    for (uint32_t i = 0; i < d_; ++i) {
        r += m * base_.add(uint32_t(va % base_.p()), uint32_t(vb % base_.p()));
        va /= base_.p();
        vb /= base_.p();
        m *= base_.p();
    }
    return {uint32_t(r)};
}

KElem FieldK::mul_slow(KElem a, KElem b) const {
    std::vector<uint32_t> pa(d_), pb(d_);
    idx_to_digits<uint32_t>(a.v, base_.p(), pa);
    idx_to_digits<uint32_t>(b.v, base_.p(), pb);
    auto prod = poly_mul(base_, pa, pb);
    poly_rem_monic(base_, prod, mod_, int(d_));
    uint64_t v = 0;
    for (size_t i = prod.size(); i-- > 0;) v = v * base_.p() + prod[i];
    return {uint32_t(v)};
}

void FieldK::build_tables() {
    if (q_ > kTableCap) return;
    auto t = std::make_shared<Tables>();
    uint32_t q = uint32_t(q_);
    t->add.resize(size_t(q) * q);
    t->mul.resize(size_t(q) * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (uint32_t i = 0; i < q; ++i)
        for (uint32_t j = 0; j < q; ++j) {
            t->add[size_t(i) * q + j] = add_slow({i}, {j}).v;
            t->mul[size_t(i) * q + j] = mul_slow({i}, {j}).v;
        }
    for (uint32_t i = 0; i < q; ++i) {
        for (uint32_t j = 0; j < q; ++j) {
            if (t->add[size_t(i) * q + j] == 0) t->neg[i] = j;
            if (i != 0 && t->mul[size_t(i) * q + j] == 1) t->inv[i] = j;
        }
    }
    auto tmul = [&](uint32_t a, uint32_t b) { return t->mul[size_t(a) * q + b]; };
    auto tpow = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = tmul(r, b);
            b = tmul(b, b);
            e >>= 1;
        }
        return r;
    };
    t->trace.resize(q);
    for (uint32_t i = 0; i < q; ++i) {
        uint32_t acc = i, x = i;
        for (uint32_t j = 1; j < d_; ++j) {
            x = tpow(x, base_.p());
            acc = t->add[size_t(acc) * q + x];
        }
        t->trace[i] = acc;
    }
    tab_ = t;
}

KElem FieldK::add(KElem a, KElem b) const {
    if (tab_) return {tab_->add[size_t(a.v) * q_ + b.v]};
    return add_slow(a, b);
}

KElem FieldK::sub(KElem a, KElem b) const { return add(a, neg(b)); }

KElem FieldK::neg(KElem a) const {
    if (tab_) return {tab_->neg[a.v]};
    std::vector<uint32_t> c(d_);
    idx_to_digits<uint32_t>(a.v, base_.p(), c);
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * base_.p() + base_.neg(c[i]);
    return {uint32_t(v)};
}

KElem FieldK::mul(KElem a, KElem b) const {
    if (tab_) return {tab_->mul[size_t(a.v) * q_ + b.v]};
    return mul_slow(a, b);
}

KElem FieldK::inv(KElem a) const {
    if (a.v == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (tab_) return {tab_->inv[a.v]};
    return pow(a, q_ - 2);
}

KElem FieldK::pow(KElem a, uint64_t e) const {
    KElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t FieldK::abs_trace(KElem a) const {
    if (tab_) return tab_->trace[a.v];
    // tr(x) = x + x^p + ... + x^(p^(d-1))
    KElem acc = a, t = a;
    for (uint32_t i = 1; i < d_; ++i) {
        t = pow(t, base_.p());
        acc = add(acc, t);
    }
    // the trace lies in the prime subfield, whose elements have index < p
    return acc.v;
}

std::vector<KElem> FieldK::elements() const {
    if (q_ > kMaxFieldSize) fail(Errc::TooLarge, "field too large to enumerate");
    std::vector<KElem> r(q_);
    for (uint64_t i = 0; i < q_; ++i) r[i] = {uint32_t(i)};
    return r;
}

// ---------------------------------------------------------------------------
// FieldL

struct FieldL::Tables {
    std::vector<uint32_t> add, mul, neg, inv;
};

FieldL::FieldL(FieldK subfield, std::vector<KElem> modulus) : k_(std::move(subfield)), mod_(std::move(modulus)) {
    if (mod_.size() < 2) fail(Errc::DegreeMismatch, "modulus must have degree >= 1");
    for (KElem c : mod_)
        if (c.v >= k_.size()) fail(Errc::DegreeMismatch, "modulus coefficient out of range");
    if (!(mod_.back() == k_.one())) fail(Errc::DegreeMismatch, "modulus must be monic");
    n_ = uint32_t(mod_.size() - 1);
    size_ = checked_pow(k_.size(), n_, kMaxFieldSize);
    if (!is_irreducible(k_, std::span<const KElem>(mod_)))
        fail(Errc::Reducible, "modulus is reducible over K");
    build_tables();
}

FieldL FieldL::with_default_modulus(FieldK subfield, uint32_t degree) {
    auto mod = default_modulus_over_k(subfield, degree);
    return FieldL(std::move(subfield), std::move(mod));
}

LElem FieldL::element(uint64_t index) const {
    if (index >= size_) fail(Errc::TooLarge, "element index out of range");
    return {uint32_t(index)};
}

LElem FieldL::embed(KElem a) const { return {a.v}; }

KElem FieldL::to_subfield(LElem a) const {
    if (!in_subfield(a)) fail(Errc::DegreeMismatch, "element lies outside the subfield");
    return {a.v};
}

std::vector<KElem> FieldL::coords(LElem a) const {
    std::vector<KElem> c(n_);
    uint64_t v = a.v;
    for (uint32_t i = 0; i < n_; ++i) {
        c[i] = {uint32_t(v % k_.size())};
        v /= k_.size();
    }
    return c;
}

LElem FieldL::from_coords(std::span<const KElem> c) const {
    if (c.size() != n_) fail(Errc::DegreeMismatch, "coordinate sequence has wrong length");
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].v >= k_.size()) fail(Errc::DegreeMismatch, "coordinate out of range");
        v = v * k_.size() + c[i].v;
    }
    return {uint32_t(v)};
}

LElem FieldL::add(LElem a, LElem b) const {
    if (tab_) return {tab_->add[size_t(a.v) * size_ + b.v]};
    uint64_t va = a.v, vb = b.v, r = 0, m = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        r += m * k_.add({uint32_t(va % k_.size())}, {uint32_t(vb % k_.size())}).v;
        va /= k_.size();
        vb /= k_.size();
        m *= k_.size();
    }
    return {uint32_t(r)};
}

LElem FieldL::sub(LElem a, LElem b) const { return add(a, neg(b)); }

LElem FieldL::neg(LElem a) const {
    if (tab_) return {tab_->neg[a.v]};
    uint64_t va = a.v, r = 0, m = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        r += m * k_.neg({uint32_t(va % k_.size())}).v;
        va /= k_.size();
        m *= k_.size();
    }
    return {uint32_t(r)};
}

LElem FieldL::mul_slow(LElem a, LElem b) const {
    auto pa = coords(a), pb = coords(b);
    auto prod = poly_mul(k_, pa, pb);
    poly_rem_monic(k_, prod, mod_, int(n_));
    uint64_t v = 0;
    for (size_t i = prod.size(); i-- > 0;) v = v * k_.size() + prod[i].v;
    return {uint32_t(v)};
}

void FieldL::build_tables() {
    if (size_ > kTableCap) return;
    auto t = std::make_shared<Tables>();
    uint32_t s = uint32_t(size_);
    t->add.resize(size_t(s) * s);
    t->mul.resize(size_t(s) * s);
    t->neg.resize(s);
    t->inv.assign(s, 0);
    for (uint32_t i = 0; i < s; ++i)
        for (uint32_t j = 0; j < s; ++j) {
            t->add[size_t(i) * s + j] = add({i}, {j}).v;
            t->mul[size_t(i) * s + j] = mul_slow({i}, {j}).v;
        }
    for (uint32_t i = 0; i < s; ++i)
        for (uint32_t j = 0; j < s; ++j) {
            if (t->add[size_t(i) * s + j] == 0) t->neg[i] = j;
            if (i != 0 && t->mul[size_t(i) * s + j] == 1) t->inv[i] = j;
        }
    tab_ = t;
}

LElem FieldL::mul(LElem a, LElem b) const {
    if (tab_) return {tab_->mul[size_t(a.v) * size_ + b.v]};
    return mul_slow(a, b);
}

LElem FieldL::inv(LElem a) const {
    if (a.v == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (tab_) return {tab_->inv[a.v]};
    return pow(a, size_ - 2);
}

LElem FieldL::pow(LElem a, uint64_t e) const {
    LElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

LElem FieldL::scalar_mul(KElem c, LElem a) const {
    uint64_t va = a.v, r = 0, m = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        r += m * k_.mul(c, {uint32_t(va % k_.size())}).v;
        va /= k_.size();
        m *= k_.size();
    }
    return {uint32_t(r)};
}

std::vector<LElem> FieldL::elements() const {
    if (size_ > kMaxFieldSize) fail(Errc::TooLarge, "field too large to enumerate");
    std::vector<LElem> r(size_);
    for (uint64_t i = 0; i < size_; ++i) r[i] = {uint32_t(i)};
    return r;
}

// ---------------------------------------------------------------------------
// Free functions

FieldL make_field_pair(uint32_t p, uint32_t d, uint32_t n,
                       std::optional<std::vector<uint32_t>> modulus_g,
                       std::optional<std::vector<KElem>> modulus_h) {
    PrimeField base(p);
    if (modulus_g && modulus_g->size() != size_t(d) + 1)
        fail(Errc::DegreeMismatch, "modulus for K must have degree " + std::to_string(d));
    FieldK k = modulus_g ? FieldK(base, std::move(*modulus_g)) : FieldK::with_default_modulus(base, d);
    if (modulus_h && modulus_h->size() != size_t(n) + 1)
        fail(Errc::DegreeMismatch, "modulus for L must have degree " + std::to_string(n));
    return modulus_h ? FieldL(std::move(k), std::move(*modulus_h))
                     : FieldL::with_default_modulus(std::move(k), n);
}

bool is_irreducible(const PrimeField& f, std::span<const uint32_t> poly) {
    return poly_irreducible(f, poly);
}

bool is_irreducible(const FieldK& f, std::span<const KElem> poly) {
    return poly_irreducible(f, poly);
}

std::vector<uint32_t> default_modulus_over_prime(const PrimeField& f, uint32_t degree) {
    return default_modulus(f, degree);
}

std::vector<KElem> default_modulus_over_k(const FieldK& f, uint32_t degree) {
    return default_modulus(f, degree);
}

}  // namespace addiso
