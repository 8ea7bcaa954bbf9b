#ifndef TAGREC_MODEL_HPP
#define TAGREC_MODEL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tagrec {

// How a triple entered the dataset. Synonym-added triples are produced
// only by synonym expansion.
enum class Provenance { Original, SpellCorrected, Stemmed, SynonymAdded };

std::string to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

// One <user, site, tag> assertion. Identity is (user, site, tag);
// provenance is an audit trail and never part of identity.
struct Triple {
    std::string user;
    std::string site;
    std::string tag;
    Provenance provenance = Provenance::Original;

    std::strong_ordering operator<=>(const Triple& o) const {
        if (auto c = user <=> o.user; c != 0) return c;
        if (auto c = site <=> o.site; c != 0) return c;
        return tag <=> o.tag;
    }
    bool operator==(const Triple& o) const {
        return user == o.user && site == o.site && tag == o.tag;
    }
};

// Deduplicated set of triples plus the derived views every counting
// measure needs. Insert-only; iteration order is deterministic.
class Dataset {
public:
    // Validates field invariants (non-empty, tag lowercase) and inserts.
    // Returns false when (user, site, tag) was already present; the first
    // writer's provenance is retained.
    bool insert(const Triple& t);

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    bool contains(const Triple& t) const;

    const std::map<Triple, Provenance>& triples() const { return triples_; }
    std::vector<Triple> triple_list() const;

    const std::set<std::string>& websites() const { return sites_; }
    const std::set<std::string>& tags() const { return tags_; }
    const std::set<std::string>& users() const { return users_; }

    // Tags attached to a site by any user. Throws on unknown site.
    const std::set<std::string>& tags_of(const std::string& site) const;
    // Sites bookmarked by a user. Throws on unknown user.
    const std::set<std::string>& sites_of(const std::string& user) const;

    bool has_site(const std::string& site) const { return sites_.count(site) != 0; }
    bool has_user(const std::string& user) const { return users_.count(user) != 0; }
    bool has_tag(const std::string& tag) const { return tags_.count(tag) != 0; }

    // Distinct sites carrying the tag; empty set for unknown tags.
    const std::set<std::string>& sites_with_tag(const std::string& tag) const;
    // Number of triples whose tag field equals tag.
    std::size_t tag_occurrences(const std::string& tag) const;
    // Number of users who attached tag to site.
    std::size_t site_tag_users(const std::string& site, const std::string& tag) const;

private:
    std::map<Triple, Provenance> triples_;
    std::set<std::string> sites_, tags_, users_;
    std::map<std::string, std::set<std::string>> site_tags_;
    std::map<std::string, std::set<std::string>> user_sites_;
    std::map<std::string, std::set<std::string>> tag_sites_;
    std::map<std::string, std::size_t> tag_count_;
    std::map<std::pair<std::string, std::string>, std::size_t> site_tag_count_;
};

// word -> set of synonyms. Words are lowercase; no word maps to itself.
class SynonymLexicon {
public:
    // Ignores self-pairs; lowercases both sides under Turkish rules.
    void add(std::string_view word, std::string_view synonym);

    const std::set<std::string>* find(const std::string& word) const;
    const std::map<std::string, std::set<std::string>>& entries() const { return entries_; }
    std::size_t pair_count() const;

private:
    std::map<std::string, std::set<std::string>> entries_;
};

// Valid-word list with frequencies; the oracle for spell correction
// and stem validation.
class Corpus {
public:
    void add(std::string_view word, long frequency = 1);
    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    long frequency(const std::string& word) const;
    std::size_t size() const { return words_.size(); }
    const std::map<std::string, long>& words() const { return words_; }

private:
    std::map<std::string, long> words_;
};

} // namespace tagrec

#endif
