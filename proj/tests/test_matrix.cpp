#include <catch2/catch_amalgamated.hpp>

#include "lcdct/dct.hpp"
#include "lcdct/matrix.hpp"

using namespace lcdct;
using Catch::Approx;

TEST_CASE("inverse of identity and diagonal") {
    const RealMatrix i4 = RealMatrix::identity(4);
    CHECK(max_abs_diff(inverse(i4), i4) == 0.0);

    RealMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const RealMatrix di = inverse(d);
    CHECK(di(0, 0) == Approx(0.5));
    CHECK(di(1, 1) == Approx(0.25));
    CHECK(di(0, 1) == 0.0);
}

TEST_CASE("inverse of an orthogonal matrix is its transpose") {
    const RealMatrix c = exact_dct(16);
    CHECK(max_abs_diff(inverse(c), c.transpose()) < 1e-12);
    CHECK(max_abs_diff(c * inverse(c), RealMatrix::identity(16)) < 1e-9);
}

TEST_CASE("inverse rejects singular and ill-conditioned input") {
    RealMatrix s(2, 2);
    s(0, 0) = 1.0; s(0, 1) = 2.0; s(1, 0) = 2.0; s(1, 1) = 4.0;
    CHECK_THROWS_AS(inverse(s), std::domain_error);

    RealMatrix bad(2, 2);
    bad(0, 0) = 1.0; bad(0, 1) = 1.0;
    bad(1, 0) = 1.0; bad(1, 1) = 1.0 + 1e-14;
    CHECK_THROWS_WITH(inverse(bad), Catch::Matchers::ContainsSubstring("condition estimate"));

    RealMatrix rect(2, 3);
    CHECK_THROWS_AS(inverse(rect), std::invalid_argument);
}

TEST_CASE("matrix product checks dimensions") {
    RealMatrix a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}
