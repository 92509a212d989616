#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "punnet/lexicon.hpp"

namespace punnet {

enum class HomonymKind { Homophone, SameSpelling };

std::string_view to_string(HomonymKind kind);
std::optional<HomonymKind> parse_homonym_kind(std::string_view text);

// Stored with a < b so the pair set has one canonical form.
struct HomonymPair {
  std::string a;
  std::string b;
  HomonymKind kind = HomonymKind::Homophone;

  auto operator<=>(const HomonymPair&) const = default;
};

struct HomonymPartner {
  std::string id;
  HomonymKind kind = HomonymKind::Homophone;

  auto operator<=>(const HomonymPartner&) const = default;
};

// Symmetric, irreflexive pair store kept separate from the lexicon.
// Immutable after load.
class HomonymBase {
 public:
  HomonymBase() = default;

  // One pair per line: "<id> <id> homophone|same_spelling". Both ids must
  // exist in the lexicon; same_spelling demands equal written forms
  // (case-insensitive), homophone demands different ones. When
  // restrict_to_noun_adj is set, every member must be a noun or adjective.
  static HomonymBase load(std::string_view source, const Lexicon& lexicon,
                          bool restrict_to_noun_adj = false);

  // Sorted partners of id; empty for unknown ids, never throws.
  const std::vector<HomonymPartner>& homonyms_of(std::string_view id) const;

  const std::vector<HomonymPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  // Canonical text form; load(serialize(), lexicon) reproduces the base.
  std::string serialize() const;

  bool operator==(const HomonymBase& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<HomonymPair> pairs_;
  std::map<std::string, std::vector<HomonymPartner>> index_;
};

}  // namespace punnet
