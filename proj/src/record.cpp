#include "hindex/record.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "hindex/errors.hpp"

namespace hindex {

using nlohmann::json;

std::int64_t Publication::citations() const {
    if (citation_events) {
        return static_cast<std::int64_t>(citation_events->size());
    }
    return citation_count.value_or(0);
}

std::int64_t CitationVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

CitationVector CitationVector::from_counts(std::vector<std::int64_t> counts) {
    CitationVector v;
    std::vector<std::size_t> order(counts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
    v.counts_.reserve(counts.size());
    v.ids_.reserve(counts.size());
    for (auto i : order) {
        v.counts_.push_back(counts[i]);
        v.ids_.push_back(fmt::format("p{}", i + 1));
    }
    return v;
}

std::string_view to_string(EntityKind kind) {
    switch (kind) {
    case EntityKind::researcher: return "researcher";
    case EntityKind::journal: return "journal";
    case EntityKind::institution: return "institution";
    case EntityKind::topic: return "topic";
    }
    return "researcher";
}

EntityKind parse_entity_kind(std::string_view text) {
    if (text == "researcher") return EntityKind::researcher;
    if (text == "journal") return EntityKind::journal;
    if (text == "institution") return EntityKind::institution;
    if (text == "topic") return EntityKind::topic;
    throw ParseError(fmt::format("field 'kind': unknown entity kind '{}'", text));
}

std::string_view to_string(GConvention convention) {
    return convention == GConvention::bounded ? "bounded" : "unbounded";
}

std::string_view to_string(SelfCitationMode mode) {
    switch (mode) {
    case SelfCitationMode::include: return "include";
    case SelfCitationMode::exclude_own: return "exclude-own";
    case SelfCitationMode::exclude_coauthor: return "exclude-coauthor";
    }
    return "include";
}

std::string normalize_author(std::string_view name) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    auto first = std::find_if_not(name.begin(), name.end(), is_space);
    auto last = std::find_if_not(name.rbegin(), name.rend(), is_space).base();
    std::string out;
    if (first < last) {
        out.assign(first, last);
    }
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void validate(const CitationRecord& record) {
    std::set<std::string> seen;
    for (const auto& pub : record.publications) {
        auto fail = [&](std::string_view what) {
            throw ValidationError(fmt::format("publication '{}': {}", pub.id, what));
        };
        if (!seen.insert(pub.id).second) {
            fail("duplicate publication id");
        }
        if (!pub.citation_count && !pub.citation_events) {
            fail("neither citation_count nor citation_events present");
        }
        if (pub.citation_count && *pub.citation_count < 0) {
            fail("negative citation_count");
        }
        if (pub.citation_count && pub.citation_events &&
            *pub.citation_count != static_cast<std::int64_t>(pub.citation_events->size())) {
            fail(fmt::format("citation_count {} disagrees with {} citation events",
                             *pub.citation_count, pub.citation_events->size()));
        }
        if (pub.author_count < 1) {
            fail("author_count must be at least 1");
        }
        if (!pub.authors.empty() && pub.author_count < static_cast<int>(pub.authors.size())) {
            fail("author_count smaller than the listed authors");
        }
        if (pub.citation_events) {
            for (const auto& ev : *pub.citation_events) {
                if (ev.year < pub.year) {
                    fail(fmt::format("citation event dated {} precedes publication year {}",
                                     ev.year, pub.year));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
T required(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(fmt::format("{}: missing field '{}'", where, key));
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(fmt::format("{}: field '{}' has the wrong type", where, key));
    }
}

template <typename T>
std::optional<T> optional_field(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return std::nullopt;
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(fmt::format("{}: field '{}' has the wrong type", where, key));
    }
}

Publication publication_from_json(const json& obj, std::size_t index) {
    std::string where = fmt::format("publications[{}]", index);
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    Publication pub;
    pub.id = required<std::string>(obj, "id", where);
    where = fmt::format("publications[{}] (id '{}')", index, pub.id);
    pub.year = required<int>(obj, "year", where);
    pub.authors = optional_field<std::vector<std::string>>(obj, "authors", where).value_or(
        std::vector<std::string>{});
    auto count = optional_field<int>(obj, "author_count", where);
    pub.author_count = count.value_or(pub.authors.empty() ? 1 : static_cast<int>(pub.authors.size()));
    pub.citation_count = optional_field<std::int64_t>(obj, "citation_count", where);
    if (auto it = obj.find("citation_events"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw ParseError(where + ": field 'citation_events' must be an array");
        }
        std::vector<CitationEvent> events;
        for (std::size_t k = 0; k < it->size(); ++k) {
            const auto& ev = (*it)[k];
            auto ev_where = fmt::format("{}.citation_events[{}]", where, k);
            if (!ev.is_object()) {
                throw ParseError(ev_where + ": expected an object");
            }
            CitationEvent e;
            e.year = required<int>(ev, "year", ev_where);
            e.citing_authors =
                optional_field<std::vector<std::string>>(ev, "citing_authors", ev_where)
                    .value_or(std::vector<std::string>{});
            events.push_back(std::move(e));
        }
        pub.citation_events = std::move(events);
    }
    return pub;
}

} // namespace

CitationRecord parse_record_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("record: top-level value must be an object");
    }
    CitationRecord record;
    record.entity = required<std::string>(doc, "entity", "record");
    record.kind = parse_entity_kind(required<std::string>(doc, "kind", "record"));
    record.owner_name = optional_field<std::string>(doc, "owner_name", "record");
    auto pubs = doc.find("publications");
    if (pubs == doc.end() || !pubs->is_array()) {
        throw ParseError("record: field 'publications' must be an array");
    }
    for (std::size_t i = 0; i < pubs->size(); ++i) {
        record.publications.push_back(publication_from_json((*pubs)[i], i));
    }
    validate(record);
    return record;
}

std::string serialize_record_json(const CitationRecord& record) {
    json doc = json::object();
    doc["entity"] = record.entity;
    doc["kind"] = std::string(to_string(record.kind));
    if (record.owner_name) {
        doc["owner_name"] = *record.owner_name;
    }
    json pubs = json::array();
    for (const auto& pub : record.publications) {
        json p = json::object();
        p["id"] = pub.id;
        p["year"] = pub.year;
        p["authors"] = pub.authors;
        p["author_count"] = pub.author_count;
        if (pub.citation_count) {
            p["citation_count"] = *pub.citation_count;
        }
        if (pub.citation_events) {
            json events = json::array();
            for (const auto& ev : *pub.citation_events) {
                events.push_back({{"year", ev.year}, {"citing_authors", ev.citing_authors}});
            }
            p["citation_events"] = std::move(events);
        }
        pubs.push_back(std::move(p));
    }
    doc["publications"] = std::move(pubs);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string trim(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) {
        throw ParseError(fmt::format("line {}: unterminated quoted field", line_no));
    }
    fields.push_back(std::move(current));
    for (auto& f : fields) {
        f = trim(f);
    }
    return fields;
}

template <typename Int>
Int parse_int(const std::string& text, std::size_t line_no, std::string_view field) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(fmt::format("line {}: field '{}': expected an integer, got '{}'",
                                     line_no, field, text));
    }
    return value;
}

std::vector<std::string> split_authors(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto name = trim(item);
        if (!name.empty()) out.push_back(std::move(name));
    }
    return out;
}

} // namespace

CitationRecord parse_record_csv(std::string_view text, std::string entity) {
    CitationRecord record;
    record.entity = std::move(entity);

    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string line(text.substr(start, end - start));
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.emplace_back(line_no, std::move(line));
            start = end + 1;
        }
    }
    if (lines.empty()) {
        throw ParseError("line 1: missing CSV header");
    }
    auto header = split_csv_line(lines.front().second, lines.front().first);
    const std::vector<std::string> counts_header{"id", "year", "author_count", "citation_count"};
    const std::vector<std::string> events_header{"pub_id", "pub_year", "author_count", "cite_year",
                                                  "citing_authors"};

    if (header == counts_header) {
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto [line_no, line] = lines[i];
            auto f = split_csv_line(line, line_no);
            if (f.size() != counts_header.size()) {
                throw ParseError(fmt::format("line {}: expected {} fields, got {}", line_no,
                                             counts_header.size(), f.size()));
            }
            Publication pub;
            pub.id = f[0];
            pub.year = parse_int<int>(f[1], line_no, "year");
            pub.author_count = f[2].empty() ? 1 : parse_int<int>(f[2], line_no, "author_count");
            pub.citation_count = parse_int<std::int64_t>(f[3], line_no, "citation_count");
            record.publications.push_back(std::move(pub));
        }
    } else if (header == events_header) {
        std::map<std::string, std::size_t> index_of;
        std::map<std::string, bool> zero_row;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto [line_no, line] = lines[i];
            auto f = split_csv_line(line, line_no);
            if (f.size() != events_header.size()) {
                throw ParseError(fmt::format("line {}: expected {} fields, got {}", line_no,
                                             events_header.size(), f.size()));
            }
            const auto& id = f[0];
            int pub_year = parse_int<int>(f[1], line_no, "pub_year");
            int author_count = f[2].empty() ? 1 : parse_int<int>(f[2], line_no, "author_count");
            auto it = index_of.find(id);
            if (it == index_of.end()) {
                Publication pub;
                pub.id = id;
                pub.year = pub_year;
                pub.author_count = author_count;
                pub.citation_events = std::vector<CitationEvent>{};
                it = index_of.emplace(id, record.publications.size()).first;
                record.publications.push_back(std::move(pub));
            }
            auto& pub = record.publications[it->second];
            if (pub.year != pub_year || pub.author_count != author_count) {
                throw ParseError(fmt::format(
                    "line {}: publication '{}' repeats with a different pub_year/author_count",
                    line_no, id));
            }
            if (f[3].empty()) {
                if (!pub.citation_events->empty() || zero_row[id]) {
                    throw ParseError(fmt::format(
                        "line {}: field 'cite_year' empty for publication '{}' that has events",
                        line_no, id));
                }
                zero_row[id] = true;
                continue;
            }
            if (zero_row[id]) {
                throw ParseError(fmt::format(
                    "line {}: publication '{}' was listed as uncited", line_no, id));
            }
            CitationEvent ev;
            ev.year = parse_int<int>(f[3], line_no, "cite_year");
            ev.citing_authors = split_authors(f[4]);
            pub.citation_events->push_back(std::move(ev));
        }
        for (auto& pub : record.publications) {
            pub.citation_count = static_cast<std::int64_t>(pub.citation_events->size());
        }
    } else {
        throw ParseError(fmt::format(
            "line {}: unrecognized CSV header (expected '{}' or '{}')", lines.front().first,
            "id,year,author_count,citation_count", "pub_id,pub_year,author_count,cite_year,citing_authors"));
    }
    validate(record);
    return record;
}

CitationRecord parse_record(const std::filesystem::path& path, RecordFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(fmt::format("{}: cannot open file", path.string()));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        if (format == RecordFormat::json) {
            return parse_record_json(buffer.str());
        }
        return parse_record_csv(buffer.str(), path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
    } catch (const ValidationError& e) {
        throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

CitationRecord parse_record(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return parse_record(path, ext == ".csv" ? RecordFormat::csv : RecordFormat::json);
}

// ---------------------------------------------------------------------------

std::optional<int> latest_year(const CitationRecord& record) {
    std::optional<int> latest;
    auto bump = [&](int y) { latest = latest ? std::max(*latest, y) : y; };
    for (const auto& pub : record.publications) {
        bump(pub.year);
        if (pub.citation_events) {
            for (const auto& ev : *pub.citation_events) bump(ev.year);
        }
    }
    return latest;
}

int resolve_now_year(const CitationRecord& record, const IndexConfig& config) {
    if (!config.now_year) {
        return latest_year(record).value_or(0);
    }
    for (const auto& pub : record.publications) {
        if (pub.year > *config.now_year) {
            throw ValidationError(fmt::format("publication '{}': year {} is after now_year {}",
                                              pub.id, pub.year, *config.now_year));
        }
    }
    return *config.now_year;
}

CitationRecord filter_self_citations(const CitationRecord& record, SelfCitationMode mode) {
    if (mode == SelfCitationMode::include) {
        return record;
    }
    std::optional<std::string> owner;
    if (record.owner_name) {
        owner = normalize_author(*record.owner_name);
    }
    if (mode == SelfCitationMode::exclude_own && !owner) {
        throw FidelityError(fmt::format(
            "record '{}': excluding own citations requires owner_name", record.entity));
    }

    CitationRecord out = record;
    for (auto& pub : out.publications) {
        if (!pub.citation_events) {
            if (pub.citations() == 0) {
                continue;
            }
            throw FidelityError(fmt::format(
                "publication '{}': self-citation filtering requires citation events", pub.id));
        }
        std::set<std::string> excluded;
        if (owner) excluded.insert(*owner);
        if (mode == SelfCitationMode::exclude_coauthor) {
            for (const auto& a : pub.authors) excluded.insert(normalize_author(a));
        }
        auto& events = *pub.citation_events;
        std::erase_if(events, [&](const CitationEvent& ev) {
            return std::any_of(ev.citing_authors.begin(), ev.citing_authors.end(),
                               [&](const std::string& a) {
                                   return excluded.contains(normalize_author(a));
                               });
        });
        pub.citation_count = static_cast<std::int64_t>(events.size());
    }
    return out;
}

CitationVector citation_vector(const CitationRecord& record, const IndexConfig& config) {
    const CitationRecord filtered = filter_self_citations(record, config.self_citation_mode);
    const auto& pubs = filtered.publications;

    std::vector<std::size_t> order(pubs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::int64_t> counts(pubs.size());
    for (std::size_t i = 0; i < pubs.size(); ++i) counts[i] = pubs[i].citations();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        if (pubs[a].year != pubs[b].year) return pubs[a].year < pubs[b].year;
        return pubs[a].id < pubs[b].id;
    });

    CitationVector v;
    v.counts_.reserve(order.size());
    v.ids_.reserve(order.size());
    for (auto i : order) {
        v.counts_.push_back(counts[i]);
        v.ids_.push_back(pubs[i].id);
    }
    return v;
}

Totals totals(const CitationRecord& record) {
    Totals t;
    t.n_p = static_cast<std::int64_t>(record.publications.size());
    for (const auto& pub : record.publications) t.n_c += pub.citations();
    return t;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace hindex
