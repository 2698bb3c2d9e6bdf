#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "resgame/error.hpp"
#include "resgame/game_io.hpp"

namespace resgame {
namespace {

using testing::bag;
using testing::F;

TEST(GameFile, EveryFixtureRoundTrips) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(testing::games_dir())) {
    if (entry.path().extension() != ".rg") continue;
    ++seen;
    const Game g = load_game(entry.path());
    const Game back = parse_game(write_game(g));
    EXPECT_EQ(back, g) << entry.path();
  }
  EXPECT_GE(seen, 6u);
}

TEST(GameFile, Divorce) {
  const Game g = testing::fixture("divorce");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.player(0).id, "a");
  EXPECT_EQ(g.goal(1), F("aclock"));
  EXPECT_EQ(g.pool(), bag("aclock, flour, flour, flour -o bread"));
  EXPECT_EQ(g.mode(), (LogicMode{Weakening::affine, Fragment::mll}));
}

TEST(GameFile, EmptyEndowmentAndComments) {
  const Game g = parse_game(
      "# nothing to give\n"
      "logic: linear mall\n"
      "\n"
      "player ann goal: bread   # hungry\n"
      "player bob goal: A & B endow: A, A\n");
  EXPECT_TRUE(g.endowment(0).empty());
  EXPECT_EQ(g.endowment(1), bag("A, A"));
}

TEST(GameFile, LogicLineOverridesDefaults) {
  const LogicMode defaults{Weakening::affine, Fragment::mall};
  EXPECT_EQ(parse_game("player a goal: A\n", defaults).mode(), defaults);
  EXPECT_EQ(parse_game("logic: linear\nplayer a goal: A\n", defaults).mode(),
            (LogicMode{Weakening::linear, Fragment::mall}));
  EXPECT_EQ(parse_game("logic: mll\nplayer a goal: A\n", defaults).mode(),
            (LogicMode{Weakening::affine, Fragment::mll}));
}

TEST(GameFile, FragmentErrorCarriesLine) {
  try {
    parse_game("logic: linear mll\nplayer a goal: A & B\n");
    FAIL() << "expected a fragment error";
  } catch (const FragmentError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(GameFile, ParseErrors) {
  EXPECT_THROW(parse_game(""), ParseError);
  EXPECT_THROW(parse_game("player a endow: A\n"), ParseError);
  EXPECT_THROW(parse_game("logic: classical\nplayer a goal: A\n"), ParseError);
  EXPECT_THROW(parse_game("plyer a goal: A\n"), ParseError);
  try {
    parse_game("logic: affine\nplayer a goal: A *\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_game("player a goal: A\nplayer a goal: B\n"), Error);
}

TEST(GameFile, MissingFile) {
  EXPECT_THROW(load_game(testing::games_dir() + "/does-not-exist.rg"), Error);
}

TEST(ProfileLiteral, Parse) {
  const Game g = testing::fixture("divorce");
  EXPECT_EQ(parse_profile("a: aclock; b:", g), Profile({bag("aclock"), {}}));
  EXPECT_EQ(parse_profile("b: {flour, flour -o bread}", g), Profile({{}, bag("flour, flour -o bread")}));
  EXPECT_EQ(parse_profile("", g), Profile::empty(2));
  EXPECT_THROW(parse_profile("c: aclock", g), Error);
  EXPECT_THROW(parse_profile("a: bread", g), InvalidInput);
  EXPECT_THROW(parse_profile("a: aclock; a: aclock", g), Error);
}

TEST(ProfileLiteral, FormatRoundTrips) {
  const Game g = testing::fixture("divorce");
  const Profile p({bag("aclock"), bag("flour, flour -o bread")});
  EXPECT_EQ(format_profile(g, p), "a: {aclock}; b: {flour, flour -o bread}");
  EXPECT_EQ(parse_profile(format_profile(g, p), g), p);
  EXPECT_EQ(format_endowment(g, g.endowments()), "a: {aclock}; b: {flour, flour, flour -o bread}");
}

}  // namespace
}  // namespace resgame
