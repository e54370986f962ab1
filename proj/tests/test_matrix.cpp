#include <catch2/catch_amalgamated.hpp>

#include <adeq/matrix.hpp>

using namespace adeq;

TEST_CASE("rational inverse and determinant") {
    RatMatrix m{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    CHECK(determinant(m) == Rat(3));
    RatMatrix inv = inverse(m);
    CHECK(inv == RatMatrix{{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}});
    CHECK(m * inv == RatMatrix::identity(2));

    RatMatrix singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(determinant(singular) == Rat(0));
    CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
}

TEST_CASE("mod1 reduces entries into [0,1)") {
    RatMatrix m{{Rat(3, 4), Rat(-1, 4)}, {Rat(5), Rat(-7, 3)}};
    RatMatrix r = mod1(m);
    CHECK(r == RatMatrix{{Rat(3, 4), Rat(3, 4)}, {Rat(0), Rat(2, 3)}});
}

TEST_CASE("scalar mod1") {
    CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
    CHECK(mod1(Rat(9, 4)) == Rat(1, 4));
    CHECK(mod1(Rat(2)) == Rat(0));
}
