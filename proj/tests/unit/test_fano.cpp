#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <set>

#include "rht/fano.hpp"

using namespace rht;

TEST(Fano, EllipticCounts) {
  EXPECT_EQ(list_families(1, true).size(), 3u);
  EXPECT_EQ(list_families(2, true).size(), 14u);
  EXPECT_EQ(list_families(3, true).size(), 22u);
  EXPECT_EQ(elliptic_families().size(), 39u);
}

TEST(Fano, EllipticEntriesMatchPublishedLists) {
  auto ids = [](int b2) {
    std::set<std::string> out;
    for (const auto& f : list_families(b2, true)) out.insert(f.id);
    return out;
  };
  EXPECT_EQ(ids(1), (std::set<std::string>{"b2=1/P3", "b2=1/Q", "b2=1/X22"}));
  std::set<std::string> two;
  for (int e : {20, 21, 22, 24, 26, 27, 29, 30, 31, 32, 33, 34, 35, 36})
    two.insert("b2=2/entry" + std::to_string(e));
  EXPECT_EQ(ids(2), two);
  std::set<std::string> three;
  for (int e : {5, 8, 10, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29,
                30, 31})
    three.insert("b2=3/entry" + std::to_string(e));
  EXPECT_EQ(ids(3), three);
}

TEST(Fano, ThirdBettiNumbers) {
  const std::vector<std::pair<std::string, int>> exact = {
      {"V4", 4},   {"V3", 10}, {"V2", 20}, {"V1", 42}, {"X2", 104}, {"X4", 60}, {"X6", 40},
      {"X8", 28},  {"X12", 14}, {"X14", 10}, {"X16", 6}, {"X18", 4}, {"X22", 0}};
  for (const auto& [name, b3] : exact)
    EXPECT_EQ(lookup("b2=1/" + name).b3, B3Value::exact(b3)) << name;
  EXPECT_EQ(lookup("b2=1/V5").b3, B3Value::at_least(1));
  EXPECT_EQ(lookup("b2=1/V5").b3.to_string(), ">=1");
}

TEST(Fano, EllipticMeansThirdBettiZero) {
  for (const auto& f : fano_families()) {
    if (f.elliptic) EXPECT_TRUE(f.b3.is_zero()) << f.id;
    if (f.elliptic) EXPECT_EQ(f.diamond, static_cast<char>('a' + f.b2 - 1)) << f.id;
    if (!f.elliptic) EXPECT_FALSE(f.diamond.has_value()) << f.id;
  }
}

TEST(Fano, Homogeneous) {
  EXPECT_TRUE(lookup("b2=1/P3").homogeneous);
  EXPECT_TRUE(lookup("b2=1/Q").homogeneous);
  EXPECT_FALSE(lookup("b2=1/X22").homogeneous);
}

TEST(Fano, UnknownId) { EXPECT_THROW(lookup("b2=1/X99"), UnknownFamilyError); }

TEST(Fano, DataFileMatchesCompiledTable) {
  const auto loaded = load_fano_tsv_file(std::string(RHT_SOURCE_DIR) + "/core/data/fano_families.tsv");
  const auto& built = fano_families();
  ASSERT_EQ(loaded.size(), built.size());
  for (std::size_t i = 0; i < built.size(); ++i) {
    EXPECT_EQ(loaded[i].id, built[i].id);
    EXPECT_EQ(loaded[i].b2, built[i].b2);
    EXPECT_EQ(loaded[i].b3, built[i].b3) << built[i].id;
    EXPECT_EQ(loaded[i].elliptic, built[i].elliptic) << built[i].id;
  }
}

TEST(Fano, MalformedTsvNamesTheLine) {
  std::istringstream in("# header\nb2=1/P3\t1\tzero\t1\tprojective space\n");
  try {
    load_fano_tsv(in);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}
