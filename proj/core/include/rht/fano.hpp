#pragma once

// Fano threefolds with b2 <= 3: invariants needed to decide which of them
// have elliptic homotopy type.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rht/graded_ring.hpp"

namespace rht {

class UnknownFamilyError : public InputError {
 public:
  using InputError::InputError;
};

/// A third Betti number that is known exactly, known from below, or not
/// recorded at all.
struct B3Value {
  enum class Kind { Exact, AtLeast, Unknown };
  Kind kind = Kind::Unknown;
  int value = 0;

  static B3Value exact(int v) { return {Kind::Exact, v}; }
  static B3Value at_least(int v) { return {Kind::AtLeast, v}; }
  static B3Value unknown() { return {}; }
  /// "7", ">=1" or "?".
  static B3Value parse(const std::string& s);

  bool is_zero() const { return kind == Kind::Exact && value == 0; }
  std::string to_string() const;

  friend bool operator==(const B3Value&, const B3Value&) = default;
};

struct FanoFamily {
  std::string id;  // "b2=1/X22", "b2=2/entry30"
  int b2 = 0;
  B3Value b3;
  std::optional<int> index_r;
  std::optional<int> genus_or_degree;  // degree d for V_d, genus g for X_{2g-2}
  std::string description;
  bool elliptic = false;
  std::optional<char> diamond;  // (a), (b), (c) when elliptic
  bool homogeneous = false;
  std::size_t family_count = 1;  // records that stand for two deformation families
};

/// Every stored record in file order (b2, then the order of the source table).
const std::vector<FanoFamily>& fano_families();

std::vector<FanoFamily> list_families(std::optional<int> b2 = std::nullopt,
                                      std::optional<bool> elliptic = std::nullopt);

/// Throws UnknownFamilyError.
const FanoFamily& lookup(const std::string& id);

std::vector<FanoFamily> elliptic_families();

/// Tab-separated records: id, b2, b3 ("k", ">=k" or "?"), elliptic (0/1),
/// description. Lines starting with '#' are comments. Throws InputError with
/// the line number on malformed input.
std::vector<FanoFamily> load_fano_tsv(std::istream& in);
std::vector<FanoFamily> load_fano_tsv_file(const std::string& path);

}  // namespace rht
