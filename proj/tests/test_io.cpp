#include <gtest/gtest.h>

#include <string>

#include "thompson/io.hpp"
#include "thompson/words.hpp"

using namespace thompson;

TEST(Io, TreeRoundTrip) {
    for (int k = 2; k <= 4; ++k)
        for (std::size_t m = 0; m <= 3; ++m)
            for (const auto& t : enumerate_trees(k, m)) EXPECT_EQ(tree_from_json(tree_to_json(t)), t);
}

TEST(Io, ElementRoundTrip) {
    for (int k = 2; k <= 4; ++k)
        for (const auto& g : enumerate_elements_upto(k, 3)) {
            auto parsed = element_from_string(element_to_json(g).dump());
            EXPECT_EQ(parsed.element, g);
            EXPECT_FALSE(parsed.was_unreduced);
        }
}

TEST(Io, ElementShape) {
    auto j = element_to_json(eval_word(parse_word("y0", 3)));
    EXPECT_EQ(j.dump(), R"({"k":3,"minus":["0","1","20","21","22"],"plus":["00","01","02","1","2"]})");
}

TEST(Io, UnreducedInputIsReducedAndFlagged) {
    auto parsed = element_from_string(
        R"({"k":3,"plus":["00","01","02","1","20","21","22"],"minus":["0","1","20","21","220","221","222"]})");
    EXPECT_TRUE(parsed.was_unreduced);
    EXPECT_EQ(parsed.element, eval_word(parse_word("y0", 3)));
}

TEST(Io, MalformedInput) {
    EXPECT_THROW(element_from_string("{"), ParseError);
    EXPECT_THROW(element_from_string(R"({"plus":["0"],"minus":["0"]})"), ParseError);
    EXPECT_THROW(element_from_string(R"({"k":3,"plus":["0","1","2"]})"), ParseError);
    EXPECT_THROW(element_from_string(R"({"k":3,"plus":[0],"minus":["0"]})"), ParseError);
    EXPECT_THROW(element_from_string(R"({"k":3,"plus":["0","1","2"],"minus":[""]})"), LeafCountMismatch);
    EXPECT_THROW(element_from_string(R"({"k":3,"plus":["0","1"],"minus":["0","1"]})"), Error);
    try {
        element_from_string("[1, 2,");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GT(e.position(), 0u);
    }
}
