#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etaq/parse.hpp"
#include "test_util.hpp"

using namespace etaq;
using testutil::DetRng;
using testutil::random_scalar;

TEST_CASE("basic curve expressions") {
    const FieldSpec& Q = FieldSpec::rationals();
    const BiForm h = parse_biform("x0^3*y0^3 + x1^3*y1^3", Q);
    CHECK(h.deg_x() == 3);
    CHECK(h.deg_y() == 3);
    CHECK(h.coeff(3, 3).is_one());
    CHECK(h.coeff(0, 0).is_one());
    CHECK(h.coeff(1, 2).is_zero());
}

TEST_CASE("cyclotomic coefficients in expressions") {
    const FieldSpec& F = FieldSpec::cyclotomic(5);
    const Scalar z = Scalar::zeta(F);
    const BiForm h = parse_biform(
        "x0*x1^2*y1^3 - z5*x0^2*x1*y0^3 + (z5^3+z5^2+z5)*x0^3*y0*y1^2 + (z5^2+z5)*x1^3*y0^2*y1",
        F);
    CHECK(h.deg_x() == 3);
    CHECK(h.deg_y() == 3);
    CHECK(h.coeff(1, 0).is_one());
    CHECK(h.coeff(2, 3) == -z);
    CHECK(h.coeff(3, 1) == z.pow(3) + z.pow(2) + z);
    CHECK(h.coeff(0, 2) == z.pow(2) + z);
}

TEST_CASE("non-bihomogeneous input is rejected with the offending pair") {
    const FieldSpec& Q = FieldSpec::rationals();
    try {
        parse_biform("x0^2*y0 + x0*y0", Q);
        FAIL("expected NotBihomogeneous");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotBihomogeneous);
        const std::string msg = e.what();
        CHECK(msg.find("x0^2*y0") != std::string::npos);
        CHECK(msg.find("x0*y0") != std::string::npos);
    }
}

TEST_CASE("parse errors carry a position") {
    const FieldSpec& Q = FieldSpec::rationals();
    CHECK_THROWS_AS(parse_biform("x0 + ", Q), Error);
    CHECK_THROWS_AS(parse_biform("x2", Q), Error);
    CHECK_THROWS_AS(parse_biform("(x0", Q), Error);
    CHECK_THROWS_AS(parse_biform("x0 x1", Q), Error); // trailing input
    CHECK_THROWS_AS(parse_biform("z5*x0", Q), Error); // needs Q(z5)
    CHECK_THROWS_AS(parse_biform("x0/y0", Q), Error); // non-constant divisor
}

TEST_CASE("expected bidegree is enforced") {
    const FieldSpec& Q = FieldSpec::rationals();
    CHECK_THROWS_AS(parse_biform("x0*y0", Q, std::make_pair(2, 2)), Error);
    const BiForm h = parse_biform("x0*y0", Q, std::make_pair(1, 1));
    CHECK(h.deg_x() == 1);
}

TEST_CASE("scalar literals") {
    const FieldSpec& Q = FieldSpec::rationals();
    CHECK(parse_scalar("5/6", Q) == Scalar::of_mpq(Q, mpq_class(5, 6)));
    CHECK(parse_scalar("-3/2 + 1", Q) == Scalar::of_mpq(Q, mpq_class(-1, 2)));
    const FieldSpec& F = FieldSpec::cyclotomic(5);
    CHECK(parse_scalar("z5^5", F).is_one());
    CHECK_THROWS_AS(parse_scalar("x0", Q), Error);
    const FieldSpec& F7 = FieldSpec::prime_field(7);
    CHECK(parse_scalar("10", F7) == Scalar::of_int(F7, 3));
    CHECK(parse_scalar("1/2", F7) == Scalar::of_int(F7, 4));
}

TEST_CASE("parse then print then parse is the identity") {
    const FieldSpec* fields[] = {&FieldSpec::rationals(), &FieldSpec::cyclotomic(5),
                                 &FieldSpec::prime_field(101)};
    for (const FieldSpec* f : fields) {
        DetRng rng(1234);
        for (int t = 0; t < 70; ++t) {
            const int d1 = static_cast<int>(rng.next_int(0, 4));
            const int d2 = static_cast<int>(rng.next_int(0, 4));
            BiForm h(*f, d1, d2);
            for (int i = 0; i <= d1; ++i)
                for (int j = 0; j <= d2; ++j)
                    if (rng.next_int(0, 2) != 0) h.set_coeff(i, j, random_scalar(rng, *f, 9));
            const std::string text = to_expression(h);
            const BiForm back = parse_biform(text, *f, std::make_pair(d1, d2));
            CHECK(back == h);
        }
    }
}
