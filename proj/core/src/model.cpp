#include "tagrec/model.hpp"

#include "tagrec/turkish.hpp"

namespace tagrec {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Original: return "original";
        case Provenance::SpellCorrected: return "spell_corrected";
        case Provenance::Stemmed: return "stemmed";
        case Provenance::SynonymAdded: return "synonym_added";
    }
    throw std::logic_error("unknown provenance");
}

Provenance provenance_from_string(std::string_view s) {
    if (s == "original") return Provenance::Original;
    if (s == "spell_corrected") return Provenance::SpellCorrected;
    if (s == "stemmed") return Provenance::Stemmed;
    if (s == "synonym_added") return Provenance::SynonymAdded;
    throw std::invalid_argument("unknown provenance: " + std::string(s));
}

bool Dataset::insert(const Triple& t) {
    if (t.user.empty()) throw std::invalid_argument("triple has empty user");
    if (t.site.empty()) throw std::invalid_argument("triple has empty site");
    if (trim(t.tag).empty()) throw std::invalid_argument("triple has empty tag");
    if (!is_turkish_lowercase(t.tag))
        throw std::invalid_argument("tag is not Turkish-lowercase: " + t.tag);

    auto [it, inserted] = triples_.emplace(t, t.provenance);
    if (!inserted) return false;

    sites_.insert(t.site);
    tags_.insert(t.tag);
    users_.insert(t.user);
    site_tags_[t.site].insert(t.tag);
    user_sites_[t.user].insert(t.site);
    tag_sites_[t.tag].insert(t.site);
    ++tag_count_[t.tag];
    ++site_tag_count_[{t.site, t.tag}];
    return true;
}

bool Dataset::contains(const Triple& t) const { return triples_.count(t) != 0; }

std::vector<Triple> Dataset::triple_list() const {
    std::vector<Triple> out;
    out.reserve(triples_.size());
    for (const auto& [t, prov] : triples_) {
        Triple copy = t;
        copy.provenance = prov;
        out.push_back(std::move(copy));
    }
    return out;
}

const std::set<std::string>& Dataset::tags_of(const std::string& site) const {
    auto it = site_tags_.find(site);
    if (it == site_tags_.end()) throw std::out_of_range("unknown site: " + site);
    return it->second;
}

const std::set<std::string>& Dataset::sites_of(const std::string& user) const {
    auto it = user_sites_.find(user);
    if (it == user_sites_.end()) throw std::out_of_range("unknown user: " + user);
    return it->second;
}

const std::set<std::string>& Dataset::sites_with_tag(const std::string& tag) const {
    static const std::set<std::string> empty;
    auto it = tag_sites_.find(tag);
    return it == tag_sites_.end() ? empty : it->second;
}

std::size_t Dataset::tag_occurrences(const std::string& tag) const {
    auto it = tag_count_.find(tag);
    return it == tag_count_.end() ? 0 : it->second;
}

std::size_t Dataset::site_tag_users(const std::string& site, const std::string& tag) const {
    auto it = site_tag_count_.find({site, tag});
    return it == site_tag_count_.end() ? 0 : it->second;
}

void SynonymLexicon::add(std::string_view word, std::string_view synonym) {
    std::string w = turkish_lowercase(trim(word));
    std::string s = turkish_lowercase(trim(synonym));
    if (w.empty() || s.empty() || w == s) return;
    entries_[w].insert(std::move(s));
}

const std::set<std::string>* SynonymLexicon::find(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

std::size_t SynonymLexicon::pair_count() const {
    std::size_t n = 0;
    for (const auto& [w, syns] : entries_) n += syns.size();
    return n;
}

void Corpus::add(std::string_view word, long frequency) {
    std::string w = turkish_lowercase(trim(word));
    if (w.empty()) throw std::invalid_argument("empty corpus word");
    if (frequency < 1) throw std::invalid_argument("corpus frequency must be >= 1");
    long& f = words_[w];
    if (frequency > f) f = frequency;
}

long Corpus::frequency(const std::string& word) const {
    auto it = words_.find(word);
    return it == words_.end() ? 0 : it->second;
}

} // namespace tagrec
