#include "punnet/homonym_base.hpp"

#include <algorithm>
#include <sstream>

#include "line_format.hpp"

namespace punnet {

std::string_view to_string(HomonymKind kind) {
  return kind == HomonymKind::Homophone ? "homophone" : "same_spelling";
}

std::optional<HomonymKind> parse_homonym_kind(std::string_view text) {
  if (text == "homophone") return HomonymKind::Homophone;
  if (text == "same_spelling") return HomonymKind::SameSpelling;
  return std::nullopt;
}

HomonymBase HomonymBase::load(std::string_view source, const Lexicon& lexicon,
                              bool restrict_to_noun_adj) {
  HomonymBase base;
  std::set<HomonymPair> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    ++line_no;
    std::string line = detail::strip_line(source.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    auto tokens = detail::tokenize(line);
    if (!tokens || tokens->size() != 3)
      throw ParseError("expected '<lexeme> <lexeme> homophone|same_spelling', got '" +
                           line + "'",
                       line_no);
    HomonymPair pair;
    pair.a = (*tokens)[0];
    pair.b = (*tokens)[1];
    auto kind = parse_homonym_kind((*tokens)[2]);
    if (!kind)
      throw ParseError("unknown homonym kind '" + (*tokens)[2] + "'", line_no);
    pair.kind = *kind;
    if (pair.a == pair.b)
      throw ParseError("lexeme " + pair.a + " cannot pair with itself", line_no);
    if (pair.b < pair.a) std::swap(pair.a, pair.b);

    const LexicalEntry* ea = lexicon.lookup(pair.a);
    const LexicalEntry* eb = lexicon.lookup(pair.b);
    if (!ea) throw ParseError("pair references unknown lexeme " + pair.a, line_no);
    if (!eb) throw ParseError("pair references unknown lexeme " + pair.b, line_no);

    bool same_form =
        normalize_surface(ea->written_form) == normalize_surface(eb->written_form);
    if (pair.kind == HomonymKind::SameSpelling && !same_form)
      throw ParseError("same_spelling pair " + pair.a + "/" + pair.b +
                           " has differing written forms",
                       line_no);
    if (pair.kind == HomonymKind::Homophone && same_form)
      throw ParseError("homophone pair " + pair.a + "/" + pair.b +
                           " has identical written forms (use same_spelling)",
                       line_no);

    if (restrict_to_noun_adj) {
      for (const LexicalEntry* e : {ea, eb}) {
        if (e->category != WordCategory::Noun && e->category != WordCategory::Adjective)
          throw ParseError("lexeme " + e->id + " is not a noun or adjective", line_no);
      }
    }
    seen.insert(pair);
  }

  base.pairs_.assign(seen.begin(), seen.end());
  for (const HomonymPair& pair : base.pairs_) {
    base.index_[pair.a].push_back({pair.b, pair.kind});
    base.index_[pair.b].push_back({pair.a, pair.kind});
  }
  for (auto& [id, partners] : base.index_) std::sort(partners.begin(), partners.end());
  return base;
}

const std::vector<HomonymPartner>& HomonymBase::homonyms_of(std::string_view id) const {
  static const std::vector<HomonymPartner> kEmpty;
  auto it = index_.find(std::string(id));
  return it == index_.end() ? kEmpty : it->second;
}

std::string HomonymBase::serialize() const {
  std::ostringstream out;
  for (const HomonymPair& pair : pairs_)
    out << pair.a << ' ' << pair.b << ' ' << to_string(pair.kind) << '\n';
  return out.str();
}

}  // namespace punnet
