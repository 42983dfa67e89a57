// hindex: command-line front end for the citation index library.
//
// Exit codes: 0 success (including partial reports with unavailable indices),
// 2 usage error, 3 input error, 4 domain error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hindex/aggregate.hpp"
#include "hindex/core_indices.hpp"
#include "hindex/errors.hpp"
#include "hindex/record.hpp"
#include "hindex/report.hpp"
#include "hindex/temporal.hpp"
#include "hindex/venue_field.hpp"

namespace {

using namespace hindex;
using ojson = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitDomain = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { table, json, csv };

struct Options {
    OutputFormat format = OutputFormat::table;
    std::string output;
    std::string input;
    std::vector<std::string> inputs;
    std::string indices;
    std::optional<int> now_year;
    double gamma = 4.0;
    double delta = 1.0;
    std::string g_convention = "bounded";
    std::string self_citations = "include";
    double alpha = -0.1;
    double beta = 0.4;
    bool strict = false;
    std::string sort_by;
    std::string emit_plot;
    std::optional<double> field_chi;
    std::optional<double> reference_chi;
    TheoreticalHReading reading = TheoreticalHReading::dimensional;
    SequenceCitations sequence_citations = SequenceCitations::recorded_totals;

    // simulate
    SimConfig sim;
    std::string model = "burrell";

    // journal / field
    std::optional<std::int64_t> articles;
    std::optional<std::int64_t> citations;
    std::optional<int> target_year;
    std::vector<int> source_years;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> articles_in_year;
    std::optional<std::int64_t> n_p;
    std::optional<double> chi;
    std::string cohort;

    IndexConfig config() const {
        IndexConfig c;
        c.now_year = now_year;
        c.gamma = gamma;
        c.delta = delta;
        c.g_convention = g_convention == "unbounded" ? GConvention::unbounded : GConvention::bounded;
        c.self_citation_mode = self_citations == "exclude-own"        ? SelfCitationMode::exclude_own
                               : self_citations == "exclude-coauthor" ? SelfCitationMode::exclude_coauthor
                                                                      : SelfCitationMode::include;
        c.alpha_predictive = alpha;
        c.beta_molinari = beta;
        return c;
    }

    ReportOptions report_options() const {
        ReportOptions o;
        o.strict = strict;
        o.field_chi = field_chi;
        o.reference_chi = reference_chi;
        o.theoretical_reading = reading;
        return o;
    }
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw ParseError(fmt::format("{}: cannot open for writing", opt.output));
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(fmt::format("{}: cannot open for writing", path));
    out << text;
}

std::vector<std::string> parse_index_list(const std::string& text,
                                          const std::vector<std::string>& fallback) {
    if (text.empty()) return fallback;
    std::vector<std::string> keys;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty()) continue;
        if (!is_known_index(item)) {
            throw UsageError(fmt::format("unknown index '{}'", item));
        }
        keys.push_back(item);
    }
    if (keys.empty()) throw UsageError("--indices is empty");
    return keys;
}

std::vector<CitationRecord> load_all(const std::vector<std::string>& paths) {
    std::vector<CitationRecord> records;
    for (const auto& p : paths) records.push_back(parse_record(p));
    return records;
}

std::string render_rows(const Options& opt, const Table& table, const ojson& json_doc) {
    switch (opt.format) {
    case OutputFormat::table: return table.render_text();
    case OutputFormat::csv: return table.render_csv();
    case OutputFormat::json: return json_doc.dump(2) + "\n";
    }
    return {};
}

// ---------------------------------------------------------------------------

void emit_plot(const Options& opt, const std::vector<CitationRecord>& records,
               const std::vector<IndexReport>& reports) {
    if (opt.emit_plot.empty()) return;
    std::vector<std::pair<IndexReport, CitationVector>> items;
    for (std::size_t i = 0; i < records.size(); ++i) {
        items.emplace_back(reports[i], citation_vector(records[i], opt.config()));
    }
    write_file(opt.emit_plot, render_plot_csv(items));
}

int cmd_compute(const Options& opt) {
    const auto record = parse_record(opt.input);
    const auto keys = parse_index_list(opt.indices, known_index_keys());
    const auto report = compute_report(record, opt.config(), keys, opt.report_options());
    switch (opt.format) {
    case OutputFormat::table: write_output(opt, render_report_table(report)); break;
    case OutputFormat::json: write_output(opt, render_report_json(report)); break;
    case OutputFormat::csv: write_output(opt, render_report_csv({report}, keys)); break;
    }
    emit_plot(opt, {record}, {report});
    return 0;
}

int cmd_compare(const Options& opt) {
    if (opt.inputs.size() < 2) throw UsageError("compare needs at least two --inputs");
    const auto records = load_all(opt.inputs);
    const auto keys = parse_index_list(opt.indices, {"h", "g", "a", "r"});
    std::vector<IndexReport> reports;
    for (const auto& r : records) {
        reports.push_back(compute_report(r, opt.config(), keys, opt.report_options()));
    }
    emit_plot(opt, records, reports);
    if (!opt.sort_by.empty()) {
        if (std::find(keys.begin(), keys.end(), opt.sort_by) == keys.end()) {
            throw UsageError(fmt::format("--sort-by '{}' is not among the requested indices", opt.sort_by));
        }
        sort_reports(reports, opt.sort_by);
    }
    switch (opt.format) {
    case OutputFormat::table: write_output(opt, render_compare_table(reports, keys)); break;
    case OutputFormat::json: write_output(opt, render_reports_json(reports)); break;
    case OutputFormat::csv: write_output(opt, render_report_csv(reports, keys)); break;
    }
    return 0;
}

int cmd_sequence(const Options& opt) {
    const auto record = parse_record(opt.input);
    const auto seq = h_sequence(record, opt.config(), opt.sequence_citations);
    Table table{{"window", "start_year", "h"}, {}};
    ojson windows = ojson::array();
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        table.rows.push_back({std::to_string(i), std::to_string(seq.start_years[i]),
                              std::to_string(seq.values[i])});
        windows.push_back({{"start_year", seq.start_years[i]}, {"h", seq.values[i]}});
    }
    ojson doc{{"entity", record.entity}, {"windows", windows}};
    write_output(opt, render_rows(opt, table, doc));
    return 0;
}

int cmd_matrix(const Options& opt) {
    if (opt.inputs.empty()) throw UsageError("matrix needs --inputs");
    const auto m = h_matrix(load_all(opt.inputs), opt.config(), opt.sequence_citations);
    if (opt.format == OutputFormat::csv) {
        write_output(opt, h_matrix_csv(m));
        return 0;
    }
    Table table{{"entity"}, {}};
    for (std::size_t i = 0; i < m.columns(); ++i) table.header.push_back(fmt::format("w{}", i));
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        std::vector<std::string> row{m.entities[r]};
        ojson cells = ojson::array();
        for (const auto& cell : m.rows[r]) {
            row.push_back(cell ? std::to_string(*cell) : "");
            cells.push_back(cell ? ojson(*cell) : ojson(nullptr));
        }
        table.rows.push_back(std::move(row));
        rows.push_back({{"entity", m.entities[r]}, {"values", cells}});
    }
    write_output(opt, render_rows(opt, table, rows));
    return 0;
}

int cmd_successive(const Options& opt) {
    if (opt.inputs.empty()) throw UsageError("successive needs --inputs");
    Group group{load_all(opt.inputs)};
    const auto cfg = opt.config();
    Table table{{"entity", "h"}, {}};
    ojson members = ojson::array();
    for (const auto& m : group.members) {
        const auto h = h_index(citation_vector(m, cfg));
        table.rows.push_back({m.entity, std::to_string(h)});
        members.push_back({{"entity", m.entity}, {"h", h}});
    }
    const auto sh = successive_h(group, cfg);
    table.rows.push_back({"successive_h", std::to_string(sh)});
    ojson doc{{"members", members}, {"successive_h", sh}};
    write_output(opt, render_rows(opt, table, doc));
    return 0;
}

int cmd_group(const Options& opt) {
    if (opt.inputs.empty()) throw UsageError("group needs --inputs");
    Group group{load_all(opt.inputs)};
    const auto cfg = opt.config();
    const auto sh = successive_h(group, cfg);
    const auto hp = group_hp(group);
    const auto hc = group_hc(group, cfg);
    Table table{{"indicator", "value"},
                {{"successive_h", std::to_string(sh)}, {"h_p", std::to_string(hp)}, {"h_c", std::to_string(hc)}}};
    ojson doc{{"successive_h", sh}, {"h_p", hp}, {"h_c", hc}};
    write_output(opt, render_rows(opt, table, doc));
    return 0;
}

int cmd_simulate(const Options& opt) {
    if (opt.model == "lotka") {
        const auto lg = lotka_group_simulate(opt.sim);
        const auto cfg = IndexConfig{};
        Table table{{"member", "n_p", "n_c", "h"}, {}};
        ojson members = ojson::array();
        for (const auto& m : lg.group.members) {
            const auto t = totals(m);
            const auto h = h_index(citation_vector(m, cfg));
            table.rows.push_back({m.entity, std::to_string(t.n_p), std::to_string(t.n_c), std::to_string(h)});
            members.push_back({{"member", m.entity}, {"n_p", t.n_p}, {"n_c", t.n_c}, {"h", h}});
        }
        const auto sh = successive_h(lg.group);
        const auto hp = group_hp(lg.group);
        const auto hc = group_hc(lg.group);
        const auto T = static_cast<double>(std::max<std::int64_t>(lg.total_sources, 1));
        const double lh = lotkaian_h(T, opt.sim.lotka_alpha);
        const double dh = dynamic_h(T, opt.sim.lotka_alpha, opt.sim.ageing_b, opt.sim.career_years);
        ojson summary{{"successive_h", sh},  {"h_p", hp},           {"h_c", hc},
                      {"total_sources", lg.total_sources}, {"lotkaian_h", lh}, {"dynamic_h", dh}};
        if (opt.format == OutputFormat::json) {
            write_output(opt, ojson{{"members", members}, {"summary", summary}}.dump(2) + "\n");
        } else {
            Table s{{"indicator", "value"},
                    {{"successive_h", std::to_string(sh)},
                     {"h_p", std::to_string(hp)},
                     {"h_c", std::to_string(hc)},
                     {"total_sources", std::to_string(lg.total_sources)},
                     {"lotkaian_h", format_full(lh)},
                     {"dynamic_h", format_full(dh)}}};
            auto render = [&](const Table& t) {
                return opt.format == OutputFormat::csv ? t.render_csv() : t.render_text();
            };
            write_output(opt, render(table) + "\n" + render(s));
        }
        return 0;
    }
    if (opt.model != "burrell") throw UsageError(fmt::format("unknown model '{}'", opt.model));

    const auto ensemble = burrell_simulate(opt.sim);
    if (opt.format == OutputFormat::csv) {
        write_output(opt, ensemble_csv(ensemble));
        return 0;
    }
    Table table{{"career_id", "years", "n_p", "n_c", "h", "a", "core_size"}, {}};
    ojson rows = ojson::array();
    for (const auto& s : ensemble.summaries) {
        table.rows.push_back({std::to_string(s.career_id), std::to_string(s.years), std::to_string(s.n_p),
                              std::to_string(s.n_c), std::to_string(s.h), format_fixed(s.a, 1),
                              std::to_string(s.core_size)});
        rows.push_back({{"career_id", s.career_id}, {"years", s.years}, {"n_p", s.n_p}, {"n_c", s.n_c},
                        {"h", s.h}, {"a", s.a}, {"core_size", s.core_size}});
    }
    write_output(opt, render_rows(opt, table, rows));
    return 0;
}

int cmd_journal(const Options& opt) {
    Table table{{"indicator", "value"}, {}};
    ojson doc = ojson::object();
    auto add = [&](const std::string& name, double value) {
        table.rows.push_back({name, format_fixed(value, 3)});
        doc[name] = value;
    };
    if (opt.articles || opt.citations) {
        JournalWindow w;
        w.target_year = opt.target_year.value_or(0);
        w.source_years = opt.source_years;
        if (!opt.target_year && w.source_years.empty()) {
            w.source_years = {-2, -1}; // relative window, target year 0
        }
        w.n_articles = opt.articles.value_or(0);
        w.n_citations = opt.citations.value_or(0);
        add("impact_factor", impact_factor(w));
    }
    if (opt.h && opt.articles_in_year) add("relative_h", relative_h(*opt.h, *opt.articles_in_year));
    if (opt.h && opt.n) {
        add("sri", sri(*opt.h, *opt.n));
        add("impact_index_hm", impact_index_hm(*opt.h, *opt.n, opt.beta));
    }
    if (table.rows.empty()) {
        throw UsageError("journal needs --articles/--citations, --h-index with --articles-in-year, or --h-index with --n");
    }
    write_output(opt, render_rows(opt, table, doc));
    return 0;
}

int cmd_field(const Options& opt) {
    Table table{{"indicator", "value"}, {}};
    ojson doc = ojson::object();
    auto add = [&](const std::string& name, double value) {
        table.rows.push_back({name, format_fixed(value, 3)});
        doc[name] = value;
    };
    if (opt.h && opt.field_chi && opt.reference_chi) {
        const auto ref = default_reference_field(*opt.reference_chi);
        const FieldProfile field{"field", *opt.field_chi};
        add("normalization_factor", field_normalization_factor(ref, field));
        add("h_field_normalized", field_normalized_h(static_cast<double>(*opt.h), ref, field));
    }
    if (opt.n_p && opt.chi) add("h_theoretical", theoretical_h_estimate(*opt.n_p, *opt.chi, opt.reading));
    if (opt.citations) add("vanraan_h", vanraan_diagnostic(*opt.citations));
    if (table.rows.empty()) {
        throw UsageError(
            "field needs --h-index with --field-chi and --reference-chi, --n-p with --chi, or --citations");
    }
    write_output(opt, render_rows(opt, table, doc));
    return 0;
}

std::vector<CohortPoint> read_cohort_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("{}: cannot open file", path));
    std::vector<CohortPoint> cohort;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "entity,n_p,h") {
                throw ParseError(fmt::format("{}: line 1: expected header 'entity,n_p,h'", path));
            }
            continue;
        }
        std::stringstream ss(line);
        CohortPoint p;
        std::string np, h;
        if (!std::getline(ss, p.entity, ',') || !std::getline(ss, np, ',') || !std::getline(ss, h)) {
            throw ParseError(fmt::format("{}: line {}: expected 3 fields", path, line_no));
        }
        try {
            p.n_p = std::stoll(np);
            p.h = std::stoll(h);
        } catch (const std::exception&) {
            throw ParseError(fmt::format("{}: line {}: non-integer n_p or h", path, line_no));
        }
        cohort.push_back(std::move(p));
    }
    return cohort;
}

int cmd_status(const Options& opt) {
    std::vector<CohortPoint> cohort;
    if (!opt.cohort.empty()) {
        cohort = read_cohort_csv(opt.cohort);
    } else {
        if (opt.inputs.empty()) throw UsageError("status needs --inputs or --cohort");
        for (const auto& r : load_all(opt.inputs)) {
            cohort.push_back({r.entity, totals(r).n_p, h_index(citation_vector(r, opt.config()))});
        }
    }
    const auto residuals = research_status(cohort);
    Table table{{"entity", "n_p", "h", "residual"}, {}};
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < cohort.size(); ++i) {
        table.rows.push_back({cohort[i].entity, std::to_string(cohort[i].n_p), std::to_string(cohort[i].h),
                              opt.format == OutputFormat::csv ? format_full(residuals[i].residual)
                                                              : format_fixed(residuals[i].residual, 3)});
        rows.push_back({{"entity", cohort[i].entity}, {"n_p", cohort[i].n_p}, {"h", cohort[i].h},
                        {"residual", residuals[i].residual}});
    }
    write_output(opt, render_rows(opt, table, rows));
    return 0;
}

// ---------------------------------------------------------------------------

void add_output_options(CLI::App* cmd, Options& opt) {
    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    cmd->add_option("--format", opt.format, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("--output", opt.output, "Write output to this file instead of stdout");
}

void add_config_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--now-year", opt.now_year, "Evaluation year (default: latest year in the record)");
    cmd->add_option("--gamma", opt.gamma, "Contemporary/trend h scale factor");
    cmd->add_option("--delta", opt.delta, "Contemporary/trend h age decay exponent");
    cmd->add_option("--g-convention", opt.g_convention, "g-index convention: bounded or unbounded")
        ->check(CLI::IsMember({"bounded", "unbounded"}));
    cmd->add_option("--self-citations", opt.self_citations,
                    "Self-citation handling: include, exclude-own or exclude-coauthor")
        ->check(CLI::IsMember({"include", "exclude-own", "exclude-coauthor"}));
    cmd->add_option("--alpha", opt.alpha, "Predictive h coefficient");
    cmd->add_option("--beta", opt.beta, "Impact index exponent");
}

void add_index_options(CLI::App* cmd, Options& opt) {
    const std::map<std::string, TheoreticalHReading> readings{
        {"dimensional", TheoreticalHReading::dimensional}, {"literal", TheoreticalHReading::literal}};
    cmd->add_option("--indices", opt.indices, "Comma-separated index keys");
    cmd->add_flag("--strict", opt.strict, "Fail instead of marking indices unavailable");
    cmd->add_option("--emit-plot", opt.emit_plot, "Write rank/citation and index/value series as CSV");
    cmd->add_option("--field-chi", opt.field_chi, "Citations per paper in the record's field");
    cmd->add_option("--reference-chi", opt.reference_chi, "Citations per paper in the reference field");
    cmd->add_option("--theoretical-reading", opt.reading, "Theoretical h reading: dimensional or literal")
        ->transform(CLI::CheckedTransformer(readings));
}

void add_sequence_options(CLI::App* cmd, Options& opt) {
    const std::map<std::string, SequenceCitations> modes{
        {"recorded", SequenceCitations::recorded_totals},
        {"through-last-year", SequenceCitations::through_last_year}};
    cmd->add_option("--citations", opt.sequence_citations,
                    "Citations per window: recorded or through-last-year")
        ->transform(CLI::CheckedTransformer(modes));
}

int run(int argc, char** argv) {
    CLI::App app{"Citation impact indices: h-index and its variants"};
    app.require_subcommand(1);
    Options opt;
    std::function<int(const Options&)> action;

    auto* compute = app.add_subcommand("compute", "Compute indices for one record");
    compute->add_option("--input", opt.input, "Record file (.json or .csv)")->required();
    add_output_options(compute, opt);
    add_config_options(compute, opt);
    add_index_options(compute, opt);
    compute->callback([&] { action = cmd_compute; });

    auto* compare = app.add_subcommand("compare", "Compare indices across records");
    compare->add_option("--inputs", opt.inputs, "Record files")->required();
    compare->add_option("--sort-by", opt.sort_by, "Order rows by this index, descending");
    add_output_options(compare, opt);
    add_config_options(compare, opt);
    add_index_options(compare, opt);
    compare->callback([&] { action = cmd_compare; });

    auto* sequence = app.add_subcommand("sequence", "h-index sequence of one record");
    sequence->add_option("--input", opt.input, "Record file")->required();
    add_output_options(sequence, opt);
    add_config_options(sequence, opt);
    add_sequence_options(sequence, opt);
    sequence->callback([&] { action = cmd_sequence; });

    auto* matrix = app.add_subcommand("matrix", "h-index matrix of a cohort");
    matrix->add_option("--inputs", opt.inputs, "Record files")->required();
    add_output_options(matrix, opt);
    add_config_options(matrix, opt);
    add_sequence_options(matrix, opt);
    matrix->callback([&] { action = cmd_matrix; });

    auto* successive = app.add_subcommand("successive", "Successive h-index of a group");
    successive->add_option("--inputs", opt.inputs, "Member record files")->required();
    add_output_options(successive, opt);
    add_config_options(successive, opt);
    successive->callback([&] { action = cmd_successive; });

    auto* group = app.add_subcommand("group", "Group successive h, h_p and h_c");
    group->add_option("--inputs", opt.inputs, "Member record files")->required();
    add_output_options(group, opt);
    add_config_options(group, opt);
    group->callback([&] { action = cmd_group; });

    auto* simulate = app.add_subcommand("simulate", "Seeded career or Lotkaian group simulation");
    simulate->add_option("--model", opt.model, "burrell or lotka")->check(CLI::IsMember({"burrell", "lotka"}));
    simulate->add_option("--seed", opt.sim.seed, "Random seed");
    simulate->add_option("--careers", opt.sim.careers, "Number of careers / group members");
    simulate->add_option("--career-years", opt.sim.career_years, "Maximum career length in years");
    simulate->add_option("--start-year", opt.sim.start_year, "Calendar year careers start");
    simulate->add_option("--pub-rate", opt.sim.pub_rate, "Expected publications per year");
    simulate->add_option("--gamma-shape", opt.sim.gamma_shape, "Citation-rate gamma shape");
    simulate->add_option("--gamma-rate", opt.sim.gamma_rate, "Citation-rate gamma rate");
    simulate->add_option("--rate-multiplier", opt.sim.citation_rate_multiplier,
                         "Scale on latent citation rates (0 disables citations)");
    simulate->add_option("--lotka-alpha", opt.sim.lotka_alpha, "Lotka exponent");
    simulate->add_option("--ageing-b", opt.sim.ageing_b, "Citation ageing rate in (0, 1)");
    add_output_options(simulate, opt);
    simulate->callback([&] { action = cmd_simulate; });

    auto* journal = app.add_subcommand("journal", "Journal indicators");
    journal->add_option("--articles", opt.articles, "Articles published in the source window");
    journal->add_option("--citations", opt.citations, "Citations received in the target year");
    journal->add_option("--target-year", opt.target_year, "Impact factor target year");
    journal->add_option("--source-years", opt.source_years, "Source window years")->delimiter(',');
    journal->add_option("--h-index", opt.h, "Journal h-index");
    journal->add_option("--n", opt.n, "Articles in the period (strike rate, impact index)");
    journal->add_option("--articles-in-year", opt.articles_in_year, "Articles in the year (relative h)");
    journal->add_option("--beta", opt.beta, "Impact index exponent");
    add_output_options(journal, opt);
    journal->callback([&] { action = cmd_journal; });

    auto* field = app.add_subcommand("field", "Field normalization and theoretical h");
    field->add_option("--h-index", opt.h, "Observed h-index");
    field->add_option("--field-chi", opt.field_chi, "Citations per paper in the field");
    field->add_option("--reference-chi", opt.reference_chi, "Citations per paper in the reference field");
    field->add_option("--n-p", opt.n_p, "Publications (theoretical h)");
    field->add_option("--chi", opt.chi, "Citations per paper (theoretical h)");
    field->add_option("--citations", opt.citations, "Total citations (van Raan diagnostic)");
    const std::map<std::string, TheoreticalHReading> readings{
        {"dimensional", TheoreticalHReading::dimensional}, {"literal", TheoreticalHReading::literal}};
    field->add_option("--theoretical-reading", opt.reading, "dimensional or literal")
        ->transform(CLI::CheckedTransformer(readings));
    add_output_options(field, opt);
    field->callback([&] { action = cmd_field; });

    auto* status = app.add_subcommand("status", "Research status residuals of a cohort");
    status->add_option("--inputs", opt.inputs, "Record files");
    status->add_option("--cohort", opt.cohort, "CSV with header entity,n_p,h");
    add_output_options(status, opt);
    add_config_options(status, opt);
    status->callback([&] { action = cmd_status; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return action(opt);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hindex::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hindex::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hindex::FidelityError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hindex::Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
