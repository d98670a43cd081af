#include "rht/fano.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace rht {

B3Value B3Value::parse(const std::string& s) {
  if (s == "?") return unknown();
  const bool lower = s.rfind(">=", 0) == 0;
  const std::string digits = lower ? s.substr(2) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("b3 must be an integer, \">=k\" or \"?\", got \"" + s + "\"");
  const int v = std::stoi(digits);
  return lower ? at_least(v) : exact(v);
}

std::string B3Value::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::Unknown:
      break;
  }
  return "?";
}

namespace {

struct Row {
  const char* id;
  int b2;
  const char* b3;
  std::optional<int> index_r;
  std::optional<int> genus_or_degree;
  const char* description;
  bool elliptic;
  bool homogeneous;
  std::size_t families;
};

// Mirrors core/data/fano_families.tsv; a unit test keeps the two in step.
const Row kRows[] = {
    {"b2=1/P3", 1, "0", 4, std::nullopt, "projective space P^3 (index 4); homogeneous", 1, true, 1},
    {"b2=1/Q", 1, "0", 3, std::nullopt, "quadric threefold Q in P^4 (index 3); homogeneous", 1, true, 1},
    {"b2=1/V5", 1, ">=1", 2, 5, "V5: section of Gr(2,5) by three general hyperplanes (index 2, degree 5); b3 >= b3(Gr(2,5)) = 1", 0, false, 1},
    {"b2=1/V4", 1, "4", 2, 4, "V4: complete intersection of two quadrics in P^5 (index 2, degree 4)", 0, false, 1},
    {"b2=1/V3", 1, "10", 2, 3, "V3: cubic threefold (index 2, degree 3)", 0, false, 1},
    {"b2=1/V2", 1, "20", 2, 2, "V2: double cover of P^3 branched over a smooth quartic surface (index 2, degree 2)", 0, false, 1},
    {"b2=1/V1", 1, "42", 2, 1, "V1: sextic hypersurface in P(1,1,1,2,3) (index 2, degree 1)", 0, false, 1},
    {"b2=1/X2", 1, "104", 1, 2, "X2: double cover of P^3 ramified over a smooth sextic surface (index 1, genus 2)", 0, false, 1},
    {"b2=1/X4", 1, "60", 1, 3, "X4: two families, a quartic in P^4 and a double cover of Q branched over a degree-8 divisor (index 1, genus 3)", 0, false, 2},
    {"b2=1/X6", 1, "40", 1, 4, "X6: complete intersection of a quadric and a cubic in P^5 (index 1, genus 4)", 0, false, 1},
    {"b2=1/X8", 1, "28", 1, 5, "X8: complete intersection of three quadrics in P^6 (index 1, genus 5)", 0, false, 1},
    {"b2=1/X10", 1, ">=1", 1, 6, "X10: two families (Gushel), Gr(2,5) cut by two hyperplanes and a quadric, and a quadric section of the cone over V5 (index 1, genus 6)", 0, false, 2},
    {"b2=1/X12", 1, "14", 1, 7, "X12: prime Fano threefold of genus 7 (index 1)", 0, false, 1},
    {"b2=1/X14", 1, "10", 1, 8, "X14: prime Fano threefold of genus 8 (index 1)", 0, false, 1},
    {"b2=1/X16", 1, "6", 1, 9, "X16: prime Fano threefold of genus 9 (index 1)", 0, false, 1},
    {"b2=1/X18", 1, "4", 1, 10, "X18: prime Fano threefold of genus 10 (index 1)", 0, false, 1},
    {"b2=1/X22", 1, "0", 1, 12, "X22: subvariety of Gr(3,7) of 3-spaces isotropic for three general skew forms (index 1, genus 12); rational homotopy equivalent to the projective space", 1, false, 1},
    {"b2=2/entry1", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 1", 0, false, 1},
    {"b2=2/entry2", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 2", 0, false, 1},
    {"b2=2/entry3", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 3", 0, false, 1},
    {"b2=2/entry4", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 4", 0, false, 1},
    {"b2=2/entry5", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 5", 0, false, 1},
    {"b2=2/entry6", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 6", 0, false, 1},
    {"b2=2/entry7", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 7", 0, false, 1},
    {"b2=2/entry8", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 8", 0, false, 1},
    {"b2=2/entry9", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 9", 0, false, 1},
    {"b2=2/entry10", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 10", 0, false, 1},
    {"b2=2/entry11", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 11", 0, false, 1},
    {"b2=2/entry12", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 12", 0, false, 1},
    {"b2=2/entry13", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 13", 0, false, 1},
    {"b2=2/entry14", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 14", 0, false, 1},
    {"b2=2/entry15", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 15", 0, false, 1},
    {"b2=2/entry16", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 16", 0, false, 1},
    {"b2=2/entry17", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 17", 0, false, 1},
    {"b2=2/entry18", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 18", 0, false, 1},
    {"b2=2/entry19", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 19", 0, false, 1},
    {"b2=2/entry20", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 20", 1, false, 1},
    {"b2=2/entry21", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 21", 1, false, 1},
    {"b2=2/entry22", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 22", 1, false, 1},
    {"b2=2/entry23", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 23", 0, false, 1},
    {"b2=2/entry24", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 24", 1, false, 1},
    {"b2=2/entry25", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 25", 0, false, 1},
    {"b2=2/entry26", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 26", 1, false, 1},
    {"b2=2/entry27", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 27", 1, false, 1},
    {"b2=2/entry28", 2, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 28", 0, false, 1},
    {"b2=2/entry29", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 29", 1, false, 1},
    {"b2=2/entry30", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 30", 1, false, 1},
    {"b2=2/entry31", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 31", 1, false, 1},
    {"b2=2/entry32", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 32", 1, false, 1},
    {"b2=2/entry33", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 33", 1, false, 1},
    {"b2=2/entry34", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 34", 1, false, 1},
    {"b2=2/entry35", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 35", 1, false, 1},
    {"b2=2/entry36", 2, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=2 entry 36", 1, false, 1},
    {"b2=3/entry1", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 1", 0, false, 1},
    {"b2=3/entry2", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 2", 0, false, 1},
    {"b2=3/entry3", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 3", 0, false, 1},
    {"b2=3/entry4", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 4", 0, false, 1},
    {"b2=3/entry5", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 5", 1, false, 1},
    {"b2=3/entry6", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 6", 0, false, 1},
    {"b2=3/entry7", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 7", 0, false, 1},
    {"b2=3/entry8", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 8", 1, false, 1},
    {"b2=3/entry9", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 9", 0, false, 1},
    {"b2=3/entry10", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 10", 1, false, 1},
    {"b2=3/entry11", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 11", 0, false, 1},
    {"b2=3/entry12", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 12", 1, false, 1},
    {"b2=3/entry13", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 13", 1, false, 1},
    {"b2=3/entry14", 3, "?", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 14", 0, false, 1},
    {"b2=3/entry15", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 15", 1, false, 1},
    {"b2=3/entry16", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 16", 1, false, 1},
    {"b2=3/entry17", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 17", 1, false, 1},
    {"b2=3/entry18", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 18", 1, false, 1},
    {"b2=3/entry19", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 19", 1, false, 1},
    {"b2=3/entry20", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 20", 1, false, 1},
    {"b2=3/entry21", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 21", 1, false, 1},
    {"b2=3/entry22", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 22", 1, false, 1},
    {"b2=3/entry23", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 23", 1, false, 1},
    {"b2=3/entry24", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 24", 1, false, 1},
    {"b2=3/entry25", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 25", 1, false, 1},
    {"b2=3/entry26", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 26", 1, false, 1},
    {"b2=3/entry27", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 27", 1, false, 1},
    {"b2=3/entry28", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 28", 1, false, 1},
    {"b2=3/entry29", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 29", 1, false, 1},
    {"b2=3/entry30", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 30", 1, false, 1},
    {"b2=3/entry31", 3, "0", std::nullopt, std::nullopt, "Mori-Mukai b2=3 entry 31", 1, false, 1},
};

std::optional<char> diamond_for(int b2, bool elliptic) {
  if (!elliptic || b2 < 1 || b2 > 3) return std::nullopt;
  return static_cast<char>('a' + b2 - 1);
}

std::vector<FanoFamily> build() {
  std::vector<FanoFamily> out;
  for (const auto& r : kRows) {
    FanoFamily f;
    f.id = r.id;
    f.b2 = r.b2;
    f.b3 = B3Value::parse(r.b3);
    f.index_r = r.index_r;
    f.genus_or_degree = r.genus_or_degree;
    f.description = r.description;
    f.elliptic = r.elliptic;
    f.diamond = diamond_for(r.b2, r.elliptic);
    f.homogeneous = r.homogeneous;
    f.family_count = r.families;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<FanoFamily>& fano_families() {
  static const std::vector<FanoFamily> table = build();
  return table;
}

std::vector<FanoFamily> list_families(std::optional<int> b2, std::optional<bool> elliptic) {
  std::vector<FanoFamily> out;
  for (const auto& f : fano_families())
    if ((!b2 || f.b2 == *b2) && (!elliptic || f.elliptic == *elliptic)) out.push_back(f);
  return out;
}

const FanoFamily& lookup(const std::string& id) {
  for (const auto& f : fano_families())
    if (f.id == id) return f;
  throw UnknownFamilyError("unknown Fano family id \"" + id + "\"");
}

std::vector<FanoFamily> elliptic_families() { return list_families(std::nullopt, true); }

std::vector<FanoFamily> load_fano_tsv(std::istream& in) {
  std::vector<FanoFamily> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, '\t');) fields.push_back(field);
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (fields.size() != 5)
      throw InputError(where + "expected 5 tab-separated fields, got " +
                       std::to_string(fields.size()));
    FanoFamily f;
    f.id = fields[0];
    try {
      std::size_t used = 0;
      f.b2 = std::stoi(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("b2");
      f.b3 = B3Value::parse(fields[2]);
    } catch (const std::exception& e) {
      throw InputError(where + "bad b2/b3 field (" + e.what() + ")");
    }
    if (fields[3] != "0" && fields[3] != "1")
      throw InputError(where + "elliptic flag must be 0 or 1");
    f.elliptic = fields[3] == "1";
    f.description = fields[4];
    f.diamond = diamond_for(f.b2, f.elliptic);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FanoFamily> load_fano_tsv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_fano_tsv(in);
}

}  // namespace rht
