#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "example_pair.hpp"
#include "lcdct/search.hpp"

using namespace lcdct;
using Catch::Approx;

namespace {

// Naive oracle: enumerate D^N per row exactly as written in the pseudo-code,
// first strictly smaller angle wins. Independent of the library scan path.
struct OracleBest {
    double angle;
    std::vector<double> row;
    std::uint64_t index;
};

std::vector<OracleBest> oracle_full_search(const RealMatrix& c, const MultiplierSet& set) {
    const std::size_t n = c.rows();
    std::vector<double> vals;
    for (const Dyadic& d : set.elements) vals.push_back(d.to_double());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= vals.size();
    std::vector<OracleBest> best(n);
    std::vector<double> p(n), crow(n);
    for (std::size_t k = 0; k < n; ++k) {
        best[k].angle = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) crow[j] = c(k, j);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            bool zero = true;
            for (std::size_t j = n; j-- > 0;) {
                p[j] = vals[v % vals.size()];
                zero &= p[j] == 0.0;
                v /= vals.size();
            }
            if (zero) continue;
            const double th = angle(p, crow);
            if (th < best[k].angle) {
                best[k].angle = th;
                best[k].row = p;
                best[k].index = idx;
            }
        }
    }
    return best;
}

DyadicMatrix from_quarter_grid(const int (&g)[16][16]) {
    DyadicMatrix m(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) m(i, j) = Dyadic(g[i][j], -2);
    return m;
}

}  // namespace

TEST_CASE("multiplier sets d1..d6") {
    const MultiplierSet d1 = multiplier_set("d1");
    CHECK(d1.elements.size() == 3);
    const MultiplierSet d6 = multiplier_set("d6");
    CHECK(d6.elements.size() == 9);
    // symmetric, contains zero, sorted ascending
    for (const char* name : {"d1", "d2", "d3", "d4", "d5", "d6"}) {
        const MultiplierSet s = multiplier_set(name);
        bool has_zero = false;
        for (const Dyadic& d : s.elements) {
            has_zero |= d.is_zero();
            bool has_neg = false;
            for (const Dyadic& e : s.elements) has_neg |= e == -d;
            CHECK(has_neg);
        }
        CHECK(has_zero);
        for (std::size_t i = 1; i < s.elements.size(); ++i)
            CHECK(s.elements[i - 1] < s.elements[i]);
    }
    CHECK_THROWS_AS(multiplier_set("d7"), std::invalid_argument);
    CHECK(multiplier_set("d2").positive_half().size() == 3);
}

TEST_CASE("angle basics") {
    const std::vector<double> e0{1, 0}, e1{0, 1}, d{1, 1};
    CHECK(angle(e0, e0) == 0.0);
    CHECK(angle(e0, e1) == Approx(std::numbers::pi / 2));
    CHECK(angle(d, e0) == Approx(std::numbers::pi / 4));
    const std::vector<double> z{0, 0};
    CHECK_THROWS_AS(angle(z, e0), std::invalid_argument);
    const std::vector<double> len3{1, 0, 0};
    CHECK_THROWS_AS(angle(len3, e0), std::invalid_argument);
}

TEST_CASE("candidate_count") {
    CHECK(candidate_count(8, multiplier_set("d1")) == "6561");
    CHECK(candidate_count(16, multiplier_set("d1")) == "43046721");
    CHECK(candidate_count(32, multiplier_set("d1")) == "1853020188851841");  // ~1.85e15
    CHECK(candidate_count(64, multiplier_set("d1")).size() == 31);           // ~3.43e30
}

TEST_CASE("greedy search matches the naive oracle at N=4 and N=8 with d1") {
    const MultiplierSet d1 = multiplier_set("d1");
    for (std::size_t n : {4, 8}) {
        const RealMatrix c = exact_dct(n);
        const SearchResult got = greedy_row_search(c, d1, 2);
        const auto want = oracle_full_search(c, d1);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(got.row_angles[k] == want[k].angle);  // bitwise
            for (std::size_t j = 0; j < n; ++j)
                CHECK(got.t(k, j).to_double() == want[k].row[j]);
        }
    }
}

TEST_CASE("greedy search row 0 is proportional to all-ones") {
    const SearchResult r = greedy_row_search(exact_dct(8), multiplier_set("d1"), 2);
    CHECK(r.row_angles[0] == 0.0);
    for (std::size_t j = 0; j < 8; ++j) CHECK(r.t(0, j) == r.t(0, 0));
    CHECK(!r.t(0, 0).is_zero());
}

TEST_CASE("greedy search is worker-count invariant") {
    const RealMatrix c = exact_dct(8);
    const MultiplierSet d2 = multiplier_set("d2");
    const SearchResult a = greedy_row_search(c, d2, 1);
    const SearchResult b = greedy_row_search(c, d2, 3);
    const SearchResult e = greedy_row_search(c, d2, 8);
    CHECK(a.t == b.t);
    CHECK(a.t == e.t);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(a.row_angles[k] == b.row_angles[k]);
        CHECK(a.row_angles[k] == e.row_angles[k]);
    }
}

TEST_CASE("every output entry lies in the declared set") {
    const MultiplierSet d2 = multiplier_set("d2");
    const SearchResult r = greedy_row_search(exact_dct(8), d2, 2);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            bool found = false;
            for (const Dyadic& d : d2.elements) found |= d == r.t(i, j);
            CHECK(found);
        }
}

TEST_CASE("budget guard refuses the full search at N=32") {
    CHECK_THROWS_AS(greedy_row_search(exact_dct(32), multiplier_set("d1")), std::length_error);
    CHECK_THROWS_WITH(greedy_row_search(exact_dct(32), multiplier_set("d1")),
                      Catch::Matchers::ContainsSubstring("reduced_search"));
}

TEST_CASE("enlarging the set never increases a row's minimal angle") {
    const RealMatrix c = exact_dct(8);
    const SearchResult r1 = greedy_row_search(c, multiplier_set("d1"), 2);
    const SearchResult r2 = greedy_row_search(c, multiplier_set("d2"), 2);
    const SearchResult r6 = greedy_row_search(c, multiplier_set("d6"), 2);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(r2.row_angles[k] <= r1.row_angles[k] + 1e-15);
        CHECK(r6.row_angles[k] <= r2.row_angles[k] + 1e-15);
    }
}

TEST_CASE("abs-column mirror symmetry of the exact DCT") {
    for (std::size_t n : {8, 16, 64}) {
        const RealMatrix c = exact_dct(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n / 2; ++j)
                CHECK(std::abs(c(k, j)) == Approx(std::abs(c(k, n - 1 - j))).margin(1e-12));
    }
}

TEST_CASE("reduced search agrees with a half-space oracle at N=8 and N=16, d1 and d2") {
    // The oracle enumerates the nonnegative half-row grid naively and scores
    // candidates on the half vectors, which is the tie-break convention of the
    // reduced search (exact ties exist, so the scoring space matters).
    for (std::size_t n : {8, 16}) {
        for (const char* set_name : {"d1", "d2"}) {
            const RealMatrix c = exact_dct(n);
            const MultiplierSet set = multiplier_set(set_name);
            const SearchResult got = reduced_search(c, set, 2);

            std::vector<double> pos;
            for (const Dyadic& d : set.positive_half()) pos.push_back(d.to_double());
            const std::size_t m = n / 2;
            std::uint64_t total = 1;
            for (std::size_t j = 0; j < m; ++j) total *= pos.size();

            for (std::size_t k = 0; k < n; ++k) {
                std::vector<double> habs(m), half(m), best_row;
                for (std::size_t j = 0; j < m; ++j) habs[j] = std::abs(c(k, j));
                double best = std::numeric_limits<double>::infinity();
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    std::uint64_t v = idx;
                    bool zero = true;
                    for (std::size_t j = m; j-- > 0;) {
                        half[j] = pos[v % pos.size()];
                        zero &= half[j] == 0.0;
                        v /= pos.size();
                    }
                    if (zero) continue;
                    const double th = angle(half, habs);
                    if (th < best) {
                        best = th;
                        best_row = half;
                    }
                }
                for (std::size_t j = 0; j < m; ++j) {
                    const double sgn = c(k, j) > 0 ? 1.0 : (c(k, j) < 0 ? -1.0 : 0.0);
                    const double sgn2 = c(k, n - 1 - j) > 0 ? 1.0 : (c(k, n - 1 - j) < 0 ? -1.0 : 0.0);
                    CHECK(got.t(k, j).to_double() == sgn * best_row[j]);
                    CHECK(got.t(k, n - 1 - j).to_double() == sgn2 * best_row[j]);
                }
                // the reported full-row angle equals the half-space optimum up to
                // the acos sensitivity floor near 0 (1-ulp cosine ~ 1e-8 angle)
                CHECK(got.row_angles[k] == Approx(best).margin(1e-7));
            }
            CHECK(got.reduced);
        }
    }
}

TEST_CASE("reduced search is worker-count invariant") {
    const RealMatrix c = exact_dct(16);
    const SearchResult a = reduced_search(c, multiplier_set("d2"), 1);
    const SearchResult b = reduced_search(c, multiplier_set("d2"), 5);
    CHECK(a.t == b.t);
}

TEST_CASE("reduced search requires an even blocklength") {
    CHECK_THROWS_AS(reduced_search(exact_dct(3), multiplier_set("d1")), std::invalid_argument);
}

TEST_CASE("reduced search keeps its own budget guard") {
    // 3^32 half-row candidates at N=64 with a 3-element nonnegative half
    CHECK_THROWS_AS(reduced_search(exact_dct(64), multiplier_set("d2")), std::length_error);
}

TEST_CASE("constrained search at N=2 yields the orthogonal pair") {
    const SearchResult r = constrained_search(exact_dct(2), multiplier_set("d1"), {0, 1});
    CHECK(r.t(0, 0) == Dyadic(1));
    CHECK(r.t(0, 1) == Dyadic(1));
    // second row orthogonal to the first, unit magnitude entries
    CHECK(r.t(1, 0) * r.t(0, 0) + r.t(1, 1) * r.t(0, 1) == Dyadic(0));
    CHECK(r.t(1, 0).abs() == Dyadic(1));
}

TEST_CASE("constrained search keeps exact dyadic orthogonality") {
    for (std::size_t n : {4, 8}) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        const SearchResult r = constrained_search(exact_dct(n), multiplier_set("d1"), order);
        const DyadicMatrix gram = r.t * r.t.transpose();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(gram(i, j) == Dyadic(0));
    }
}

TEST_CASE("constrained search validates its inputs") {
    CHECK_THROWS_AS(constrained_search(exact_dct(16), multiplier_set("d1"),
                                       std::vector<std::size_t>(16, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(constrained_search(exact_dct(4), multiplier_set("d1"), {0, 1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(constrained_search(exact_dct(4), multiplier_set("d1"), {0, 1, 2, 2}),
                    std::invalid_argument);
}

TEST_CASE("equivalence classes") {
    const DyadicMatrix a = from_quarter_grid(testdata::kExamplePairA);
    const DyadicMatrix b = from_quarter_grid(testdata::kExamplePairB);
    CHECK(group_equivalence_classes({a, b}).size() == 1);

    DyadicMatrix twice = a;
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) twice(i, j) = a(i, j) * Dyadic(2);
    CHECK(group_equivalence_classes({a, twice}).size() == 1);

    CHECK(group_equivalence_classes({DyadicMatrix::identity(2), butterfly(2)}).size() == 2);
}
