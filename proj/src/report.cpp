#include "hindex/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <fmt/format.h>
#include <json.hpp>

#include "hindex/coauthor.hpp"
#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"
#include "hindex/temporal.hpp"

namespace hindex {

using ojson = nlohmann::ordered_json;

const IndexEntry* IndexReport::find(std::string_view key) const {
    for (const auto& e : entries) {
        if (e.key == key) return &e;
    }
    return nullptr;
}

const std::vector<std::string>& known_index_keys() {
    static const std::vector<std::string> keys{
        // order statistics
        "h", "g", "a", "r", "h_w", "h2", "w", "maxprod", "f", "t",
        "r_m", "h_core_cv", "r_m_cv", "h_alpha", "core_sum", "n_p", "n_c",
        // time
        "h_contemporary", "h_trend", "h_norm_output", "ar", "m_quotient",
        // co-authorship
        "h_i_mean", "h_i_median", "h_pure", "h_m_schreiber",
        // venue and field
        "sri", "impact_index_hm", "h_field_normalized", "h_theoretical", "vanraan_h",
    };
    return keys;
}

bool is_known_index(std::string_view key) {
    const auto& keys = known_index_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

int display_decimals(std::string_view key) {
    if (key == "a" || key == "r" || key == "h_w" || key == "ar") return 1;
    return 2;
}

namespace {

// Lazily computed inputs shared by the index evaluators.
class EvalContext {
public:
    EvalContext(const CitationRecord& record, const IndexConfig& config,
                const ReportOptions& options)
        : record_(record), config_(config), options_(options) {}

    const CitationRecord& record() const { return record_; }
    const IndexConfig& config() const { return config_; }
    const ReportOptions& options() const { return options_; }

    const CitationVector& vector() {
        if (!vector_) vector_ = citation_vector(record_, config_);
        return *vector_;
    }
    const AuthoredVector& authored() {
        if (!authored_) authored_ = authored_vector(record_, config_);
        return *authored_;
    }
    std::int64_t h() { return h_index(vector()); }
    std::int64_t n_p() { return static_cast<std::int64_t>(record_.publications.size()); }
    std::int64_t n_c() { return vector().total(); }

private:
    const CitationRecord& record_;
    const IndexConfig& config_;
    const ReportOptions& options_;
    std::optional<CitationVector> vector_;
    std::optional<AuthoredVector> authored_;
};

struct Evaluator {
    bool integral;
    std::function<double(EvalContext&)> fn;
};

template <typename F>
Evaluator integer(F f) {
    return {true, [f](EvalContext& c) { return static_cast<double>(f(c)); }};
}

template <typename F>
Evaluator real(F f) {
    return {false, [f](EvalContext& c) { return static_cast<double>(f(c)); }};
}

const std::map<std::string, Evaluator, std::less<>>& evaluators() {
    static const std::map<std::string, Evaluator, std::less<>> table{
        {"h", integer([](EvalContext& c) { return c.h(); })},
        {"g", integer([](EvalContext& c) { return g_index(c.vector(), c.config().g_convention); })},
        {"a", real([](EvalContext& c) { return a_index(c.vector()); })},
        {"r", real([](EvalContext& c) { return r_index(c.vector()); })},
        {"h_w", real([](EvalContext& c) { return hw_index(c.vector()); })},
        {"h2", integer([](EvalContext& c) { return h2_index(c.vector()); })},
        {"w", integer([](EvalContext& c) { return w_index(c.vector()); })},
        {"maxprod", integer([](EvalContext& c) { return maxprod(c.vector()); })},
        {"f", integer([](EvalContext& c) { return f_index(c.vector()); })},
        {"t", integer([](EvalContext& c) { return t_index(c.vector()); })},
        {"r_m", real([](EvalContext& c) { return rm_index(c.vector()); })},
        {"h_core_cv", real([](EvalContext& c) { return h_core_cv(c.vector()); })},
        {"r_m_cv", real([](EvalContext& c) { return rmcv_index(c.vector()); })},
        {"h_alpha", real([](EvalContext& c) {
             return h_alpha_predict(c.h(), c.n_c(), c.config().alpha_predictive);
         })},
        {"core_sum", integer([](EvalContext& c) { return h_core_sum(c.vector()); })},
        {"n_p", integer([](EvalContext& c) { return c.n_p(); })},
        {"n_c", integer([](EvalContext& c) { return c.n_c(); })},
        {"h_contemporary", integer([](EvalContext& c) { return contemporary_h(c.record(), c.config()); })},
        {"h_trend", integer([](EvalContext& c) { return trend_h(c.record(), c.config()); })},
        {"h_norm_output", real([](EvalContext& c) { return normalized_h_output(c.record(), c.config()); })},
        {"ar", real([](EvalContext& c) { return ar_index(c.record(), c.config()); })},
        {"m_quotient", real([](EvalContext& c) { return m_quotient(c.record(), c.config()); })},
        {"h_i_mean", real([](EvalContext& c) { return hi_index(c.authored(), CoreCenter::mean); })},
        {"h_i_median", real([](EvalContext& c) { return hi_index(c.authored(), CoreCenter::median); })},
        {"h_pure", real([](EvalContext& c) { return pure_h(c.authored()); })},
        {"h_m_schreiber", real([](EvalContext& c) { return schreiber_hm(c.authored()); })},
        {"sri", real([](EvalContext& c) { return sri(c.h(), c.n_p()); })},
        {"impact_index_hm", real([](EvalContext& c) {
             return impact_index_hm(c.h(), c.n_p(), c.config().beta_molinari);
         })},
        {"h_field_normalized", real([](EvalContext& c) {
             const auto& o = c.options();
             if (!o.field_chi || !o.reference_chi) {
                 throw UndefinedInputError("needs --field-chi and --reference-chi");
             }
             return field_normalized_h(static_cast<double>(c.h()),
                                       default_reference_field(*o.reference_chi),
                                       FieldProfile{"field", *o.field_chi});
         })},
        {"h_theoretical", real([](EvalContext& c) {
             if (c.n_p() == 0) throw UndefinedInputError("needs at least one publication");
             const double chi = static_cast<double>(c.n_c()) / static_cast<double>(c.n_p());
             return theoretical_h_estimate(c.n_p(), chi, c.options().theoretical_reading);
         })},
        {"vanraan_h", real([](EvalContext& c) { return vanraan_diagnostic(c.n_c()); })},
    };
    return table;
}

} // namespace

IndexReport compute_report(const CitationRecord& record, const IndexConfig& config,
                           const std::vector<std::string>& keys, const ReportOptions& options) {
    IndexReport report;
    report.entity = record.entity;
    report.kind = std::string(to_string(record.kind));
    report.config = config;
    report.config.now_year = resolve_now_year(record, config);
    report.options = options;

    EvalContext ctx(record, report.config, options);
    for (const auto& key : keys) {
        auto it = evaluators().find(key);
        if (it == evaluators().end()) {
            throw std::invalid_argument(fmt::format("unknown index '{}'", key));
        }
        IndexEntry entry;
        entry.key = key;
        entry.integral = it->second.integral;
        try {
            entry.value = it->second.fn(ctx);
        } catch (const FidelityError& e) {
            if (options.strict) throw;
            entry.reason = e.what();
        } catch (const DomainError& e) {
            if (options.strict) throw;
            entry.reason = e.what();
        } catch (const UndefinedInputError& e) {
            if (options.strict) throw;
            entry.reason = e.what();
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

void sort_reports(std::vector<IndexReport>& reports, std::string_view key) {
    auto value_of = [&](const IndexReport& r) -> std::optional<double> {
        const auto* e = r.find(key);
        return e ? e->value : std::nullopt;
    };
    std::stable_sort(reports.begin(), reports.end(), [&](const IndexReport& a, const IndexReport& b) {
        const auto va = value_of(a);
        const auto vb = value_of(b);
        if (va.has_value() != vb.has_value()) return va.has_value();
        if (va && *va != *vb) return *va > *vb;
        return a.entity < b.entity;
    });
}

// ---------------------------------------------------------------------------
// Text and CSV

std::string format_fixed(double value, int decimals) {
    auto text = fmt::format("{:.{}f}", value, decimals);
    if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) {
        text.erase(0, 1);
    }
    return text;
}

std::string format_full(double value) {
    return fmt::format("{}", value);
}

std::string Table::render_text() const {
    std::vector<std::size_t> widths(header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    };
    widen(header);
    for (const auto& row : rows) widen(row);
    auto line = [&](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 == row.size()) {
                out += row[i];
            } else {
                out += fmt::format("{:<{}}  ", row[i], widths[i]);
            }
        }
        out.erase(out.find_last_not_of(' ') + 1);
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    return out;
}

std::string Table::render_csv() const {
    auto line = [](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(row[i]);
        }
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    return out;
}

namespace {

std::string display_value(const IndexEntry& e) {
    if (!e.value) return "n/a";
    if (e.integral) return fmt::format("{}", static_cast<std::int64_t>(*e.value));
    return format_fixed(*e.value, display_decimals(e.key));
}

std::string csv_value(const IndexEntry* e) {
    if (!e || !e->value) return "";
    if (e->integral) return fmt::format("{}", static_cast<std::int64_t>(*e->value));
    return format_full(*e->value);
}

} // namespace

std::string render_report_table(const IndexReport& report) {
    std::string out = fmt::format("{} ({})\n", report.entity, report.kind);
    Table table{{"index", "value"}, {}};
    for (const auto& e : report.entries) {
        auto shown = display_value(e);
        if (!e.value) shown += fmt::format(" ({})", e.reason);
        table.rows.push_back({e.key, shown});
    }
    return out + table.render_text();
}

std::string render_report_csv(const std::vector<IndexReport>& reports,
                              const std::vector<std::string>& keys) {
    Table table{{"entity", "kind"}, {}};
    table.header.insert(table.header.end(), keys.begin(), keys.end());
    for (const auto& r : reports) {
        std::vector<std::string> row{r.entity, r.kind};
        for (const auto& k : keys) row.push_back(csv_value(r.find(k)));
        table.rows.push_back(std::move(row));
    }
    return table.render_csv();
}

std::string render_compare_table(const std::vector<IndexReport>& reports,
                                 const std::vector<std::string>& keys) {
    Table table{{"entity"}, {}};
    table.header.insert(table.header.end(), keys.begin(), keys.end());
    for (const auto& r : reports) {
        std::vector<std::string> row{r.entity};
        for (const auto& k : keys) {
            const auto* e = r.find(k);
            row.push_back(e ? display_value(*e) : "n/a");
        }
        table.rows.push_back(std::move(row));
    }
    return table.render_text();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

GConvention parse_g_convention(std::string_view text) {
    if (text == "bounded") return GConvention::bounded;
    if (text == "unbounded") return GConvention::unbounded;
    throw ParseError(fmt::format("report: unknown g convention '{}'", text));
}

SelfCitationMode parse_self_citation_mode(std::string_view text) {
    if (text == "include") return SelfCitationMode::include;
    if (text == "exclude-own") return SelfCitationMode::exclude_own;
    if (text == "exclude-coauthor") return SelfCitationMode::exclude_coauthor;
    throw ParseError(fmt::format("report: unknown self-citation mode '{}'", text));
}

ojson report_to_json(const IndexReport& report) {
    ojson doc = ojson::object();
    doc["entity"] = report.entity;
    doc["kind"] = report.kind;
    const auto& c = report.config;
    ojson config = ojson::object();
    if (c.now_year) {
        config["now_year"] = *c.now_year;
    } else {
        config["now_year"] = nullptr;
    }
    config["gamma"] = c.gamma;
    config["delta"] = c.delta;
    config["g_convention"] = std::string(to_string(c.g_convention));
    config["self_citation_mode"] = std::string(to_string(c.self_citation_mode));
    config["alpha_predictive"] = c.alpha_predictive;
    config["beta_molinari"] = c.beta_molinari;
    const auto& o = report.options;
    config["strict"] = o.strict;
    config["field_chi"] = o.field_chi ? ojson(*o.field_chi) : ojson(nullptr);
    config["reference_chi"] = o.reference_chi ? ojson(*o.reference_chi) : ojson(nullptr);
    config["theoretical_reading"] =
        o.theoretical_reading == TheoreticalHReading::dimensional ? "dimensional" : "literal";
    doc["config"] = std::move(config);

    ojson values = ojson::object();
    for (const auto& e : report.entries) {
        if (!e.value) {
            values[e.key] = ojson{{"unavailable", e.reason}};
        } else if (e.integral) {
            values[e.key] = static_cast<std::int64_t>(*e.value);
        } else {
            values[e.key] = *e.value;
        }
    }
    doc["values"] = std::move(values);
    return doc;
}

IndexReport report_from_json(const ojson& doc) {
    try {
        IndexReport r;
        r.entity = doc.at("entity").get<std::string>();
        r.kind = doc.at("kind").get<std::string>();
        const auto& c = doc.at("config");
        if (!c.at("now_year").is_null()) r.config.now_year = c.at("now_year").get<int>();
        r.config.gamma = c.at("gamma").get<double>();
        r.config.delta = c.at("delta").get<double>();
        r.config.g_convention = parse_g_convention(c.at("g_convention").get<std::string>());
        r.config.self_citation_mode =
            parse_self_citation_mode(c.at("self_citation_mode").get<std::string>());
        r.config.alpha_predictive = c.at("alpha_predictive").get<double>();
        r.config.beta_molinari = c.at("beta_molinari").get<double>();
        r.options.strict = c.at("strict").get<bool>();
        if (!c.at("field_chi").is_null()) r.options.field_chi = c.at("field_chi").get<double>();
        if (!c.at("reference_chi").is_null()) r.options.reference_chi = c.at("reference_chi").get<double>();
        r.options.theoretical_reading = c.at("theoretical_reading").get<std::string>() == "literal"
                                            ? TheoreticalHReading::literal
                                            : TheoreticalHReading::dimensional;
        for (const auto& [key, value] : doc.at("values").items()) {
            IndexEntry e;
            e.key = key;
            if (value.is_object()) {
                e.reason = value.at("unavailable").get<std::string>();
            } else if (value.is_number_integer()) {
                e.integral = true;
                e.value = static_cast<double>(value.get<std::int64_t>());
            } else {
                e.value = value.get<double>();
            }
            r.entries.push_back(std::move(e));
        }
        return r;
    } catch (const ojson::exception& e) {
        throw ParseError(fmt::format("report: {}", e.what()));
    }
}

ojson parse_json_text(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ParseError(e.what());
    }
}

} // namespace

std::string render_report_json(const IndexReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_reports_json(const std::vector<IndexReport>& reports) {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
}

IndexReport parse_report_json(std::string_view text) {
    return report_from_json(parse_json_text(text));
}

std::vector<IndexReport> parse_reports_json(std::string_view text) {
    const auto doc = parse_json_text(text);
    if (!doc.is_array()) throw ParseError("reports: expected an array");
    std::vector<IndexReport> out;
    for (const auto& item : doc) out.push_back(report_from_json(item));
    return out;
}

std::string render_plot_csv(const std::vector<std::pair<IndexReport, CitationVector>>& items) {
    Table table{{"entity", "series", "x", "y"}, {}};
    for (const auto& [report, vec] : items) {
        for (std::size_t i = 0; i < vec.size(); ++i) {
            table.rows.push_back({report.entity, "rank_citations", std::to_string(i + 1),
                                  std::to_string(vec.counts()[i])});
        }
        for (const auto& e : report.entries) {
            if (!e.value) continue;
            table.rows.push_back({report.entity, "index_value", e.key, csv_value(&e)});
        }
    }
    return table.render_csv();
}

} // namespace hindex
