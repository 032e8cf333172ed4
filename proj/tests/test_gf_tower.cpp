#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "addiso/gf_tower.hpp"

using namespace addiso;

namespace {

// Test-side polynomial product over F_p, independent of the library's
// division-based machinery.
std::vector<uint32_t> poly_product(uint32_t p, const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Reducibility oracle: a monic f of degree D factors iff it equals a product
// of two monic polynomials of degrees a and D-a with 1 <= a <= D/2.
bool oracle_reducible(uint32_t p, const std::vector<uint32_t>& f) {
    uint32_t deg = uint32_t(f.size() - 1);
    auto monic_polys = [&](uint32_t d) {
        std::vector<std::vector<uint32_t>> out;
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            std::vector<uint32_t> poly(d + 1, 0);
            uint64_t v = t;
            for (uint32_t i = 0; i < d; ++i) {
                poly[i] = uint32_t(v % p);
                v /= p;
            }
            poly[d] = 1;
            out.push_back(std::move(poly));
        }
        return out;
    };
    for (uint32_t a = 1; a <= deg / 2; ++a)
        for (const auto& g : monic_polys(a))
            for (const auto& h : monic_polys(deg - a))
                if (poly_product(p, g, h) == f) return true;
    return false;
}

// index-table snapshot of a field, for fast exhaustive axiom grids
struct LTables {
    std::vector<uint32_t> add, mul;
    uint32_t size;
};

LTables snapshot(const FieldL& f) {
    LTables t;
    t.size = uint32_t(f.size());
    t.add.resize(size_t(t.size) * t.size);
    t.mul.resize(size_t(t.size) * t.size);
    for (uint32_t i = 0; i < t.size; ++i)
        for (uint32_t j = 0; j < t.size; ++j) {
            t.add[size_t(i) * t.size + j] = f.add({i}, {j}).v;
            t.mul[size_t(i) * t.size + j] = f.mul({i}, {j}).v;
        }
    return t;
}

}  // namespace

TEST_CASE("field pair construction and default moduli") {
    FieldL f4 = make_field_pair(2, 1, 2);
    CHECK(f4.size() == 4);
    CHECK(f4.modulus() == std::vector<KElem>{{1}, {1}, {1}});  // x^2+x+1, the only choice

    FieldL f9 = make_field_pair(3, 1, 2);
    CHECK(f9.size() == 9);
    // oracle: first monic quadratic over F_3 without a root, scanning in
    // index order of the non-leading coefficients
    std::vector<KElem> expected;
    for (uint32_t idx = 0;; ++idx) {
        uint32_t c0 = idx % 3, c1 = idx / 3 % 3;
        bool has_root = false;
        for (uint32_t x = 0; x < 3; ++x)
            if ((c0 + c1 * x + x * x) % 3 == 0) has_root = true;
        if (!has_root) {
            expected = {{c0}, {c1}, {1}};
            break;
        }
    }
    CHECK(f9.modulus() == expected);
    CHECK(f9.modulus() == std::vector<KElem>{{1}, {0}, {1}});  // x^2+1

    SUBCASE("determinism") {
        FieldL again = make_field_pair(3, 1, 2);
        CHECK(again == f9);
        CHECK(FieldK::with_default_modulus(PrimeField(2), 4).modulus() ==
              FieldK::with_default_modulus(PrimeField(2), 4).modulus());
    }

    SUBCASE("invalid inputs") {
        CHECK_THROWS_AS(make_field_pair(4, 1, 1), Error);
        CHECK_THROWS_AS(make_field_pair(1, 1, 1), Error);
        // x^2 factors as x*x
        CHECK_THROWS_WITH_AS(make_field_pair(2, 1, 2, std::nullopt, std::vector<KElem>{{0}, {0}, {1}}),
                             "modulus is reducible over K", Error);
        CHECK_THROWS_AS(make_field_pair(2, 2, 1, std::vector<uint32_t>{1, 1}, std::nullopt), Error);
        try {
            make_field_pair(7, 1, 1);
        } catch (const Error&) {
            CHECK(false);
        }
        try {
            make_field_pair(9, 1, 1);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonPrime);
        }
    }
}

TEST_CASE("arithmetic in F4 and F9") {
    FieldL f4 = make_field_pair(2, 1, 2);
    LElem w{2};  // the residue of the extension variable
    CHECK(f4.mul(w, w) == LElem{3});          // w^2 = w + 1
    CHECK(f4.add(w, f4.one()) == LElem{3});
    for (LElem a : f4.elements()) CHECK(f4.add(a, f4.zero()) == a);

    FieldL f9 = make_field_pair(3, 1, 2);
    LElem alpha{3};
    CHECK(f9.mul(alpha, alpha) == f9.embed(KElem{2}));  // alpha^2 = -1 = 2
    for (LElem a : f9.elements()) CHECK(f9.add(a, f9.zero()) == a);

    CHECK_THROWS_AS(f4.inv(f4.zero()), Error);
    CHECK_THROWS_AS(f9.subfield().inv(f9.subfield().zero()), Error);
}

TEST_CASE("irreducibility by trial division") {
    PrimeField f2(2);
    CHECK(is_irreducible(f2, std::vector<uint32_t>{1, 1, 1}));       // x^2+x+1
    CHECK_FALSE(is_irreducible(f2, std::vector<uint32_t>{1, 0, 1})); // (x+1)^2
    CHECK(is_irreducible(f2, std::vector<uint32_t>{1, 1, 0, 1}));    // x^3+x+1

    SUBCASE("agrees with the factorization oracle") {
        for (uint32_t p : {2u, 3u}) {
            PrimeField f(p);
            for (uint32_t deg = 2; deg <= 4; ++deg) {
                uint64_t count = 1;
                for (uint32_t i = 0; i < deg; ++i) count *= p;
                for (uint64_t t = 0; t < count; ++t) {
                    std::vector<uint32_t> poly(deg + 1, 0);
                    uint64_t v = t;
                    for (uint32_t i = 0; i < deg; ++i) {
                        poly[i] = uint32_t(v % p);
                        v /= p;
                    }
                    poly[deg] = 1;
                    CHECK(is_irreducible(f, poly) == !oracle_reducible(p, poly));
                }
            }
        }
    }
}

TEST_CASE("coordinates in the power basis") {
    FieldL f4 = make_field_pair(2, 1, 2);
    LElem w2{3};  // w^2 = 1 + w
    CHECK(f4.coords(w2) == std::vector<KElem>{{1}, {1}});
    CHECK(f4.coords(f4.zero()) == std::vector<KElem>{{0}, {0}});
    CHECK(f4.from_coords(std::vector<KElem>{{0}, {1}}) == LElem{2});

    SUBCASE("round trip in F16 over F4") {
        FieldL f16 = make_field_pair(2, 2, 2);
        CHECK(f16.size() == 16);
        for (LElem a : f16.elements()) CHECK(f16.from_coords(f16.coords(a)) == a);
    }

    SUBCASE("K-linearity, exhaustive for small L") {
        for (const FieldL& f : {make_field_pair(2, 1, 2), make_field_pair(3, 1, 2),
                                make_field_pair(2, 2, 2), make_field_pair(2, 2, 3)}) {
            const FieldK& kf = f.subfield();
            for (LElem a : f.elements())
                for (LElem b : f.elements())
                    for (KElem lam : kf.elements()) {
                        LElem lhs = f.add(a, f.scalar_mul(lam, b));
                        auto ca = f.coords(a), cb = f.coords(b);
                        std::vector<KElem> want(f.degree());
                        for (uint32_t i = 0; i < f.degree(); ++i)
                            want[i] = kf.add(ca[i], kf.mul(lam, cb[i]));
                        CHECK(f.coords(lhs) == want);
                    }
        }
    }
}

TEST_CASE("element enumeration order") {
    FieldL f2 = make_field_pair(2, 1, 1);
    CHECK(f2.elements() == std::vector<LElem>{{0}, {1}});

    FieldL f4 = make_field_pair(2, 1, 2);
    auto els = f4.elements();
    REQUIRE(els.size() == 4);
    // 0, 1, w, w^2 under the coefficient order
    CHECK(els[0] == f4.zero());
    CHECK(els[1] == f4.one());
    CHECK(els[2] == f4.from_coords(std::vector<KElem>{{0}, {1}}));
    CHECK(els[3] == f4.mul(els[2], els[2]));

    CHECK(make_field_pair(3, 1, 2).elements().size() == 9);
}

TEST_CASE("subfield embedding") {
    FieldL f16 = make_field_pair(2, 2, 2);
    const FieldK& k4 = f16.subfield();
    for (KElem a : k4.elements()) {
        LElem e = f16.embed(a);
        CHECK(f16.in_subfield(e));
        CHECK(f16.to_subfield(e) == a);
    }
    // first element outside K is the extension generator
    LElem w = f16.element(k4.size());
    CHECK_FALSE(f16.in_subfield(w));
    CHECK(f16.coords(w) == std::vector<KElem>{{0}, {1}});
    // embedding is a ring homomorphism
    for (KElem a : k4.elements())
        for (KElem b : k4.elements()) {
            CHECK(f16.mul(f16.embed(a), f16.embed(b)) == f16.embed(k4.mul(a, b)));
            CHECK(f16.add(f16.embed(a), f16.embed(b)) == f16.embed(k4.add(a, b)));
        }
}

TEST_CASE("field axioms on exhaustive grids") {
    std::vector<FieldL> fields;
    fields.push_back(make_field_pair(2, 1, 2));   // 4
    fields.push_back(make_field_pair(2, 1, 3));   // 8
    fields.push_back(make_field_pair(3, 1, 2));   // 9
    fields.push_back(make_field_pair(2, 2, 2));   // 16
    fields.push_back(make_field_pair(5, 1, 2));   // 25
    fields.push_back(make_field_pair(3, 1, 3));   // 27
    fields.push_back(make_field_pair(2, 2, 3));   // 64
    fields.push_back(make_field_pair(2, 4, 2));   // 256
    for (const FieldL& f : fields) {
        CAPTURE(f.size());
        LTables t = snapshot(f);
        uint32_t s = t.size;
        auto add = [&](uint32_t a, uint32_t b) { return t.add[size_t(a) * s + b]; };
        auto mul = [&](uint32_t a, uint32_t b) { return t.mul[size_t(a) * s + b]; };
        uint64_t bad = 0;
        for (uint32_t a = 0; a < s; ++a)
            for (uint32_t b = 0; b < s; ++b) {
                if (add(a, b) != add(b, a)) ++bad;
                if (mul(a, b) != mul(b, a)) ++bad;
                for (uint32_t c = 0; c < s; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c))) ++bad;
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) ++bad;
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) ++bad;
                }
            }
        CHECK(bad == 0);
        for (uint32_t a = 1; a < s; ++a) {
            LElem inv = f.inv({a});
            CHECK(mul(a, inv.v) == 1);
        }
        for (uint32_t a = 0; a < s; ++a) {
            CHECK(add(a, f.neg({a}).v) == 0);
            // Frobenius: a^(q^n) = a
            CHECK(f.pow({a}, f.size()) == LElem{a});
        }
    }
}

TEST_CASE("abs trace") {
    FieldK k4 = FieldK::with_default_modulus(PrimeField(2), 2);
    // traces over F_2: 0, 0, 1, 1 for 0, 1, a, a+1
    CHECK(k4.abs_trace({0}) == 0);
    CHECK(k4.abs_trace({1}) == 0);
    CHECK(k4.abs_trace({2}) == 1);
    CHECK(k4.abs_trace({3}) == 1);

    // additive, and each fiber has p^(d-1) elements
    for (uint32_t p : {2u, 3u}) {
        FieldK k = FieldK::with_default_modulus(PrimeField(p), 2);
        std::vector<uint64_t> fiber(p, 0);
        for (KElem a : k.elements()) {
            ++fiber[k.abs_trace(a)];
            for (KElem b : k.elements())
                CHECK((k.abs_trace(a) + k.abs_trace(b)) % p == k.abs_trace(k.add(a, b)));
        }
        for (uint64_t count : fiber) CHECK(count == k.size() / p);
    }
}

TEST_CASE("fields beyond the table cap use the slow path") {
    FieldL f1024 = make_field_pair(2, 1, 10);
    CHECK(f1024.size() == 1024);
    std::vector<LElem> sample;
    for (uint32_t i = 0; i < 40; ++i) sample.push_back({i * 25 + 1});
    for (LElem a : sample) {
        CHECK(f1024.mul(a, f1024.inv(a)) == f1024.one());
        CHECK(f1024.pow(a, f1024.size()) == a);
        for (LElem b : sample) CHECK(f1024.mul(a, b) == f1024.mul(b, a));
    }
    CHECK_THROWS_AS(make_field_pair(2, 1, 25), Error);  // exceeds the size bound
}
