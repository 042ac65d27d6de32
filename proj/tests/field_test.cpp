#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ocyc/field.hpp"
#include "ocyc/polynomial.hpp"

using namespace ocyc;

namespace {

// Polynomial-basis arithmetic over F_p, written directly on coefficient vectors.
struct BasisOracle {
    std::int64_t p;
    std::vector<int> modulus;  // monic, degree d
    int d;

    std::vector<int> decode(std::int64_t enc) const {
        std::vector<int> c(d, 0);
        for (int i = 0; i < d; ++i, enc /= p) c[i] = static_cast<int>(enc % p);
        return c;
    }
    std::int64_t encode(const std::vector<int>& c) const {
        std::int64_t enc = 0;
        for (int i = d - 1; i >= 0; --i) enc = enc * p + c[i];
        return enc;
    }
    std::int64_t add(std::int64_t x, std::int64_t y) const {
        auto a = decode(x), b = decode(y);
        for (int i = 0; i < d; ++i) a[i] = static_cast<int>((a[i] + b[i]) % p);
        return encode(a);
    }
    std::int64_t mul(std::int64_t x, std::int64_t y) const {
        const auto a = decode(x), b = decode(y);
        std::vector<std::int64_t> r(2 * d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        for (int k = 2 * d - 1; k >= d; --k) {
            const auto t = r[k];
            if (t == 0) continue;
            for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - t * modulus[i]) % p + p) % p;
        }
        std::vector<int> out(d);
        for (int i = 0; i < d; ++i) out[i] = static_cast<int>(r[i]);
        return encode(out);
    }
};

BasisOracle oracle_for(const FieldContext& f) {
    return {f.p(), f.modulus(), f.degree()};
}

// Monic degree-d polynomial from the non-leading coefficient encoding t.
std::vector<int> monic_from(std::int64_t t, std::int64_t p, int d) {
    std::vector<int> c(d + 1, 0);
    for (int i = 0; i < d; ++i, t /= p) c[i] = static_cast<int>(t % p);
    c[d] = 1;
    return c;
}

std::vector<int> poly_mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, std::int64_t p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + a[i] * b[j]) % p);
    return r;
}

// Reducible iff some product of two monic factors of positive degree equals it.
bool reducible_by_products(const std::vector<int>& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int d1 = 1; d1 <= d / 2; ++d1) {
        std::int64_t c1 = 1, c2 = 1;
        for (int i = 0; i < d1; ++i) c1 *= p;
        for (int i = 0; i < d - d1; ++i) c2 *= p;
        for (std::int64_t s = 0; s < c1; ++s)
            for (std::int64_t t = 0; t < c2; ++t)
                if (poly_mul_mod_p(monic_from(s, p, d1), monic_from(t, p, d - d1), p) == f) return true;
    }
    return false;
}

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};

}  // namespace

TEST(Field, AddAndMulMatchPolynomialBasisExhaustively) {
    for (auto [p, m] : kSmallFields) {
        const auto f = build_field(p, m);
        const auto o = oracle_for(f);
        for (std::int64_t x = 0; x < f.size(); ++x)
            for (std::int64_t y = 0; y < f.size(); ++y) {
                ASSERT_EQ(f.encode(f.add(f.decode(x), f.decode(y))), o.add(x, y)) << p << "^" << m;
                ASSERT_EQ(f.encode(f.mul(f.decode(x), f.decode(y))), o.mul(x, y)) << p << "^" << m;
            }
    }
}

TEST(Field, ModulusIsSmallestIrreducible) {
    for (auto [p, m] : kSmallFields) {
        const auto f = build_field(p, m);
        const int d = f.degree();
        ASSERT_FALSE(reducible_by_products(f.modulus(), p));
        std::int64_t own = 0;
        for (int i = d - 1; i >= 0; --i) own = own * p + f.modulus()[i];
        for (std::int64_t t = 0; t < own; ++t) EXPECT_TRUE(reducible_by_products(monic_from(t, p, d), p)) << t;
    }
}

TEST(Field, KnownModuli) {
    EXPECT_EQ(build_field(3, 1).modulus(), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(build_field(2, 2).modulus(), (std::vector<int>{1, 1, 0, 0, 1}));
    EXPECT_EQ(build_field(3, 1).order(), 8u);
}

TEST(Field, GammaIsSmallestPrimitiveEncoding) {
    for (auto [p, m] : kSmallFields) {
        const auto f = build_field(p, m);
        const auto o = oracle_for(f);
        auto order = [&](std::int64_t x) {
            std::int64_t y = x, k = 1;
            while (y != 1) y = o.mul(y, x), ++k;
            return k;
        };
        ASSERT_EQ(order(f.gamma_encoding()), f.size() - 1);
        for (std::int64_t x = 1; x < f.gamma_encoding(); ++x) EXPECT_LT(order(x), f.size() - 1);
    }
}

TEST(Field, ClosureAtSeven) {
    const auto f = build_field(7, 1);
    const auto o = oracle_for(f);
    std::set<std::int64_t> seen;
    std::int64_t y = 1;
    for (std::uint32_t k = 0; k < f.order(); ++k) {
        ASSERT_EQ(f.encode(f.from_exponent(k)), y);
        seen.insert(y);
        y = o.mul(y, f.gamma_encoding());
    }
    EXPECT_EQ(seen.size(), 48u);
    EXPECT_EQ(y, 1);
    for (std::int64_t x = 0; x < f.size(); x += 5)
        for (std::int64_t z = 0; z < f.size(); z += 3) ASSERT_EQ(f.encode(f.add(f.decode(x), f.decode(z))), o.add(x, z));
}

TEST(Field, FieldAxiomsSampled) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        const auto f = build_field(p, m, {.max_q = 16});
        const auto all = f.elements();
        const auto zero = FieldElement::zero();
        for (std::size_t i = 0; i < all.size(); i += 3) {
            const auto x = all[i];
            EXPECT_EQ(f.add(x, f.neg(x)), zero);
            EXPECT_EQ(f.add(x, zero), x);
            if (!x.is_zero()) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
            for (std::size_t j = 0; j < all.size(); j += 7) {
                const auto y = all[j];
                EXPECT_EQ(f.add(x, y), f.add(y, x));
                for (std::size_t k = 0; k < all.size(); k += 11) {
                    const auto z = all[k];
                    ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                }
            }
        }
    }
}

TEST(Field, SubfieldAndTraces) {
    const auto f = build_field(2, 2);
    // Every relative trace and norm lands in F_q, and each value of F_q is hit q times by Tr_rel.
    std::map<std::int64_t, int> tr_fiber, norm_fiber;
    for (auto x : f.elements()) {
        ASSERT_TRUE(f.in_subfield(f.trace_rel(x)));
        ASSERT_TRUE(f.in_subfield(f.norm(x)));
        ++tr_fiber[f.subfield_index(f.trace_rel(x))];
        // Absolute trace of x equals the F_q trace of Tr_rel(x).
        EXPECT_EQ(f.trace_abs(x, TraceDomain::extension), f.trace_abs(f.trace_rel(x), TraceDomain::base));
    }
    for (auto [k, v] : tr_fiber) EXPECT_EQ(v, 4);
    EXPECT_EQ(f.subfield_elements().size(), 4u);
    // Trace F_4 -> F_2 is x + x^2.
    for (auto x : f.subfield_elements())
        EXPECT_EQ(f.trace_abs(x, TraceDomain::base), f.encode(f.add(x, f.pow(x, 2))));

    const auto g = build_field(5, 1);
    for (auto x : g.elements())
        if (!x.is_zero()) ++norm_fiber[g.subfield_index(g.norm(x))];
    EXPECT_EQ(norm_fiber.size(), 4u);
    for (auto [k, v] : norm_fiber) EXPECT_EQ(v, 6);
    EXPECT_THROW(g.trace_abs(g.gamma(), TraceDomain::base), std::domain_error);
}

TEST(Field, DeltaGeneratesSubfield) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        const auto f = build_field(p, m);
        std::set<FieldElement> seen;
        for (std::int64_t j = 0; j < f.q() - 1; ++j) seen.insert(f.delta_power(j));
        EXPECT_EQ(static_cast<std::int64_t>(seen.size()), f.q() - 1);
        EXPECT_EQ(f.pow(f.delta(), f.q() - 1), f.one());
        for (std::int64_t i = 0; i < f.q(); ++i) EXPECT_EQ(f.subfield_index(f.subfield_element(i)), i);
    }
}

TEST(Field, PowAndInverseEdges) {
    const auto f = build_field(3, 1);
    EXPECT_EQ(f.pow(FieldElement::zero(), 0), f.one());
    EXPECT_EQ(f.pow(FieldElement::zero(), 3), FieldElement::zero());
    EXPECT_THROW(f.pow(FieldElement::zero(), -1), std::domain_error);
    EXPECT_THROW(f.inv(FieldElement::zero()), std::domain_error);
    EXPECT_EQ(f.pow(f.gamma(), -1), f.inv(f.gamma()));
    EXPECT_EQ(f.pow(f.gamma(), 8), f.one());
}

TEST(Field, CyclotomicCosets) {
    const auto f = build_field(3, 1);
    EXPECT_EQ(f.cyclotomic_coset(1), (std::vector<std::int64_t>{1, 3}));
    EXPECT_EQ(f.cyclotomic_coset(4), (std::vector<std::int64_t>{4}));
    EXPECT_EQ(f.cyclotomic_coset(-1), (std::vector<std::int64_t>{5, 7}));
    EXPECT_EQ(f.coset_leader(7), 5);
    // Cosets partition Z/(q^2-1).
    const auto g = build_field(2, 2);
    std::set<std::int64_t> covered;
    std::size_t total = 0;
    for (std::int64_t a = 0; a < 15; ++a)
        if (g.coset_leader(a) == a) {
            const auto c = g.cyclotomic_coset(a);
            total += c.size();
            covered.insert(c.begin(), c.end());
        }
    EXPECT_EQ(total, 15u);
    EXPECT_EQ(covered.size(), 15u);
}

TEST(Field, MinimalPolynomials) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
        const auto f = build_field(p, m);
        for (std::int64_t a = 0; a < f.order(); ++a) {
            const auto h = minimal_poly(f, a);
            ASSERT_TRUE(poly::over_subfield(f, h));
            EXPECT_EQ(h.leading(), f.one());
            EXPECT_EQ(h.degree(), static_cast<int>(f.cyclotomic_coset(a).size()));
            EXPECT_TRUE(poly::eval(f, h, f.from_exponent(-a)).is_zero());
            // h_a divides x^n - 1.
            const auto dm = poly::divmod(f, poly::x_pow_minus_one(f, static_cast<int>(f.order())), h);
            EXPECT_TRUE(dm.remainder.is_zero());
        }
    }
}

TEST(Field, DeterministicConstruction) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {7, 1}, {3, 2}}) {
        const auto a = build_field(p, m);
        const auto b = build_field(p, m);
        EXPECT_TRUE(a == b);
        EXPECT_EQ(a.zech_table(), b.zech_table());
    }
}

TEST(Field, ConstructionErrors) {
    EXPECT_THROW(build_field(4, 1), ConfigError);
    EXPECT_THROW(build_field(1, 1), ConfigError);
    EXPECT_THROW(build_field(3, 0), ConfigError);
    EXPECT_THROW(build_field(2, 5), BoundError);
    EXPECT_NO_THROW(build_field(2, 5, {.max_q = 32}));
    const auto f = build_field(3, 1);
    EXPECT_THROW(f.decode(9), ConfigError);
    EXPECT_THROW(f.decode(-1), ConfigError);
}
