#include <gtest/gtest.h>

#include <string>

#include "thompson/words.hpp"

using namespace thompson;

namespace {

std::string nf(const std::string& w, int k = 3) { return to_string(normal_form(eval_word(parse_word(w, k)))); }

}  // namespace

TEST(Words, ParseAndPrint) {
    auto w = parse_word("y0 y3^-1 y3^2", 3);
    EXPECT_EQ(to_string(w), "y0 y3");
    EXPECT_EQ(w.arity, 3);
    EXPECT_EQ(parse_word("x2", 3).arity, 2);
    EXPECT_EQ(parse_word("z1", 3).arity, 5);
    EXPECT_EQ(to_string(parse_word("id", 3)), "id");
    EXPECT_TRUE(parse_word("  ", 4).empty());
}

TEST(Words, ParseErrorsCarryPositions) {
    try {
        parse_word("y1 q0", 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    try {
        parse_word("y1 y0^0", 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(parse_word("y1 x0", 3), ParseError);
    EXPECT_THROW(parse_word("y", 3), ParseError);
    EXPECT_THROW(parse_word("y1^", 3), ParseError);
    EXPECT_THROW(parse_word("y1^2x", 3), ParseError);
}

TEST(Words, EvaluationBasics) {
    EXPECT_TRUE(eval_word(parse_word("", 3)).is_identity());
    EXPECT_EQ(eval_word(parse_word("y1 y0", 3)), eval_word(parse_word("y0 y3", 3)));
}

TEST(Words, NormalFormExamples) {
    EXPECT_EQ(nf("id"), "id");
    EXPECT_EQ(nf("y1 y0"), "y0 y3");
    EXPECT_EQ(nf("y0 y0^-1"), "id");
    EXPECT_EQ(nf("y2^-1 y0^-1"), "y2^-1 y0^-1");
    EXPECT_EQ(nf("y0 y3 y0^-1"), "y1");
    EXPECT_EQ(nf("y0^-1 y1 y0"), "y3");
    EXPECT_EQ(nf("x1 x0", 2), "y0 y2");
}

TEST(Words, PresentationRelations) {
    for (int k = 2; k <= 5; ++k)
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t l = 0; l < n; ++l)
                EXPECT_EQ(multiply(elementary(k, n), elementary(k, l)),
                          multiply(elementary(k, l), elementary(k, n + static_cast<std::size_t>(k) - 1)));
}

TEST(Words, NormalFormRoundTripExhaustive) {
    for (int k = 2; k <= 5; ++k) {
        std::size_t bound = k == 2 ? 4 : 3;
        for (const auto& g : enumerate_elements_upto(k, bound)) {
            auto w = normal_form(g);
            EXPECT_EQ(eval_word(w), g) << to_string(w);
            EXPECT_TRUE(is_normal_form_shaped(w)) << to_string(w);
            EXPECT_TRUE(w.is_merged());
        }
    }
}

TEST(Words, NormalFormIsConstantOnEqualElements) {
    // different words for the same element
    for (const auto& [a, b] : {std::pair{"y1 y0", "y0 y3"}, {"y2 y0 y0^-1", "y2"}, {"y3^-1 y0^-1", "y0^-1 y1^-1"}})
        EXPECT_EQ(nf(a), nf(b));
}

TEST(Words, ShapeCheckRejectsNonNormalWords) {
    EXPECT_FALSE(is_normal_form_shaped(parse_word("y3 y0", 3)));
    EXPECT_FALSE(is_normal_form_shaped(parse_word("y0 y3 y0^-1", 3)));
    EXPECT_TRUE(is_normal_form_shaped(parse_word("y0 y1 y0^-1", 3)));
    EXPECT_FALSE(is_normal_form_shaped(parse_word("y0^-1 y1", 3)));
}

TEST(Words, LengthParity) {
    EXPECT_EQ(length_parity(Element::identity(3)), 0);
    EXPECT_EQ(length_parity(elementary(3, 0)), 1);
    EXPECT_EQ(length_parity(eval_word(parse_word("y0 y3", 3))), 0);
    EXPECT_EQ(word_length(parse_word("y0^-2 y3", 3)), 3);
}

TEST(Words, ConcatAndInverse) {
    auto w = parse_word("y0 y2^-1", 3);
    auto inv = inverse_word(w);
    EXPECT_EQ(to_string(inv), "y2 y0^-1");
    EXPECT_TRUE(concat(w, inv).empty());
    EXPECT_THROW(concat(w, parse_word("x0", 3)), ArityMismatch);
}

TEST(Words, SubstitutionIsHomomorphic) {
    auto image = [](std::size_t i) { return elementary(3, 2 * i); };
    for (const auto& g : enumerate_elements_upto(2, 3))
        for (const auto& h : enumerate_elements_upto(2, 2))
            EXPECT_EQ(substitute(multiply(g, h), 3, image), multiply(substitute(g, 3, image), substitute(h, 3, image)));
}
