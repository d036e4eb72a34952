#ifndef CXD_LEXICON_HPP
#define CXD_LEXICON_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cxd {

enum class SpatialKind {
    LeftOf,
    RightOf,
    Above,
    Below,
    On,
    Under,
    Inside,
    Beside,
};

const char* spatial_kind_name(SpatialKind kind);
std::optional<SpatialKind> spatial_kind_from_name(const std::string& name);

// Surface phrase that signals a spatial relation, e.g. {"to","the","left","of"}.
struct SpatialPhrase {
    SpatialKind kind;
    std::vector<std::string> words;
};

// One opposing pair; an entity matching member_a conflicts with one matching member_b.
struct ConflictRule {
    std::string class_name;
    std::string member_a;
    std::string member_b;
};

/// Closed word lists driving the rule-based parser. Loaded once, shared
/// read-only afterwards.
///
/// File format: UTF-8, line oriented, '#' comments. Sections:
///   [nouns]        one noun per line
///   [adjectives]   one adjective per line
///   [spatial]      kind: phrase | phrase | ...
///   [conflicts]    classname: memberA | memberB
///   [backgrounds]  one scenery noun per line, earlier lines win ties
class Lexicon {
public:
    static Lexicon parse(const std::string& content, const std::string& source_name = "<string>");
    static Lexicon load_file(const std::string& path);

    // Compiled-in default covering common scene vocabulary.
    static const Lexicon& builtin();

    bool has_noun(const std::string& lower) const { return nouns_.count(lower) > 0; }
    bool has_adjective(const std::string& lower) const { return adjectives_.count(lower) > 0; }

    // Maps a token to its lexicon head form, folding simple plurals
    // ("cats" -> "cat", "boxes" -> "box", "berries" -> "berry").
    std::optional<std::string> noun_form(const std::string& lower) const;

    // -1 when the head is not scenery; otherwise its priority rank (0 = highest).
    int background_rank(const std::string& head) const;

    const std::vector<SpatialPhrase>& spatial_phrases() const { return spatial_; }
    const std::vector<ConflictRule>& conflict_rules() const { return conflicts_; }
    const std::vector<std::string>& backgrounds() const { return backgrounds_; }

    std::size_t noun_count() const { return nouns_.size(); }
    bool loaded() const { return !nouns_.empty(); }

private:
    std::unordered_set<std::string> nouns_;
    std::unordered_set<std::string> adjectives_;
    std::vector<SpatialPhrase> spatial_;  // sorted longest phrase first
    std::vector<ConflictRule> conflicts_;
    std::vector<std::string> backgrounds_;
    std::unordered_map<std::string, int> background_ranks_;
};

}  // namespace cxd

#endif
