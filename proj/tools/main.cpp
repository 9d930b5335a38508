// Command-line surface: per-query computations, grid sweeps, and the full
// cross-validation suite with machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "scrollcalc/cech.hpp"
#include "scrollcalc/chow.hpp"
#include "scrollcalc/divisors.hpp"
#include "scrollcalc/hilbert.hpp"
#include "scrollcalc/p1.hpp"
#include "scrollcalc/rng.hpp"
#include "scrollcalc/scroll.hpp"
#include "scrollcalc/verify.hpp"
#include "scrollcalc/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace scrollcalc;

long long as_ll(const Integer& x) { return to_ll(x); }

struct CommonOptions {
    std::string format = "table";
    std::string out_file;
    std::uint64_t seed = 0;
};

struct GridSpec {
    Integer lo;
    Integer hi;
};

GridSpec parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const Integer single(text);
            return {single, single};
        }
        const GridSpec spec{Integer(text.substr(0, dots)), Integer(text.substr(dots + 2))};
        if (spec.lo > spec.hi) throw std::invalid_argument("empty range");
        return spec;
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected lo..hi, got '" + text + "'");
    }
}

json envelope(const std::string& query, json params, json results,
              const std::vector<std::string>& warnings, std::uint64_t seed) {
    return json{{"query", query},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"warnings", warnings},
                {"version", kToolVersion},
                {"seed", seed}};
}

void flatten(const json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items())
            flatten(sub, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_null()) {
        out.emplace_back(prefix, "");
    } else if (value.is_string()) {
        out.emplace_back(prefix, value.get<std::string>());
    } else {
        out.emplace_back(prefix, value.dump());
    }
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (const char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void print_flat_table(std::ostream& os, const json& object) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(object, "", cells);
    std::size_t width = 0;
    for (const auto& [key, value] : cells) width = std::max(width, key.size());
    for (const auto& [key, value] : cells)
        os << key << std::string(width - key.size() + 2, ' ') << value << "\n";
}

// Sweep rows may be ragged (gated families report fewer fields); the header
// comes from the widest row.
void print_rows(std::ostream& os, const json& rows, const std::string& format) {
    std::vector<std::vector<std::pair<std::string, std::string>>> flat;
    std::size_t header_row = 0;
    for (const auto& row : rows) {
        flat.emplace_back();
        flatten(row, "", flat.back());
        if (flat.back().size() > flat[header_row].size()) header_row = flat.size() - 1;
    }
    if (flat.empty()) return;

    std::vector<std::string> header;
    for (const auto& [key, value] : flat[header_row]) header.push_back(key);
    const auto cell = [&](std::size_t row, std::size_t col) -> std::string {
        for (const auto& [key, value] : flat[row])
            if (key == header[col]) return value;
        return "";
    };

    if (format == "csv") {
        for (std::size_t j = 0; j < header.size(); ++j)
            os << (j ? "," : "") << csv_escape(header[j]);
        os << "\n";
        for (std::size_t i = 0; i < flat.size(); ++i) {
            for (std::size_t j = 0; j < header.size(); ++j)
                os << (j ? "," : "") << csv_escape(cell(i, j));
            os << "\n";
        }
        return;
    }
    std::vector<std::size_t> widths(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
        widths[j] = header[j].size();
        for (std::size_t i = 0; i < flat.size(); ++i)
            widths[j] = std::max(widths[j], cell(i, j).size());
    }
    for (std::size_t j = 0; j < header.size(); ++j)
        os << header[j] << std::string(widths[j] - header[j].size() + 2, ' ');
    os << "\n";
    for (std::size_t i = 0; i < flat.size(); ++i) {
        for (std::size_t j = 0; j < header.size(); ++j)
            os << cell(i, j) << std::string(widths[j] - cell(i, j).size() + 2, ' ');
        os << "\n";
    }
}

// Renders the envelope in the chosen format on stdout; --out always receives
// the JSON envelope so every format carries identical values.
void emit(const json& report, const CommonOptions& common) {
    if (common.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        const json& results = report["results"];
        if (results.is_object() && results.contains("rows")) {
            print_rows(std::cout, results["rows"], common.format);
        } else if (common.format == "csv") {
            print_rows(std::cout, json::array({results}), common.format);
        } else {
            print_flat_table(std::cout, results);
        }
        for (const auto& warning : report["warnings"])
            std::cout << "warning: " << warning.get<std::string>() << "\n";
    }
    if (!common.out_file.empty()) {
        std::ofstream out(common.out_file);
        if (!out) throw std::runtime_error("cannot write " + common.out_file);
        out << report.dump(2) << "\n";
    }
}

const char* to_string(scroll::VanishingCase c) {
    switch (c) {
        case scroll::VanishingCase::low_range: return "low_range";
        case scroll::VanishingCase::generic_range: return "generic_range";
        default: return "out_of_range";
    }
}

// Bundle-level and (when admissible) scroll-level data for one family.
json scroll_results(const Integer& b, const Integer& k, std::vector<std::string>& warnings) {
    const auto regime = scroll::validate_family(b, k);
    json results;
    results["b"] = as_ll(b);
    results["k"] = as_ll(k);
    results["regime"] = {{"bundle_range", regime.bundle_range},
                         {"scroll_range", regime.scroll_range},
                         {"split_regime", regime.split_regime},
                         {"vanishing_case", to_string(regime.vanishing_case)}};

    if (!regime.bundle_range) {
        warnings.push_back("(b=" + b.str() + ",k=" + k.str() +
                           ") is outside k >= b >= 4; only regime flags reported");
        return results;
    }

    const auto table = scroll::cohomology_table(b, k);
    json coh{{"h0A", as_ll(table.h0A)}, {"h1A", as_ll(table.h1A)}, {"h0B", as_ll(table.h0B)}};
    coh["h0E_generic"] = table.h0E_generic ? json(as_ll(*table.h0E_generic)) : json(nullptr);
    coh["h1E_generic"] = table.h1E_generic ? json(as_ll(*table.h1E_generic)) : json(nullptr);
    results["cohomology"] = coh;
    results["dim_ext1"] = as_ll(scroll::dim_ext1(b, k));
    results["end_dim"] = as_ll(scroll::end_dim(b, k));
    if (!table.h1E_generic)
        warnings.push_back("(b=" + b.str() + ",k=" + k.str() +
                           "): k > 4b-1, no genericity statement covers h^1(E)");

    if (!regime.scroll_range) {
        warnings.push_back("(b=" + b.str() + ",k=" + k.str() +
                           ") fails 5 <= b <= k <= 4b-8; scroll and component data omitted");
        return results;
    }

    const scroll::ScrollFamily family(b, k);
    const auto inv = chow::numerical_invariants(family);
    results["invariants"] = {{"d", as_ll(inv.d)},     {"g", as_ll(inv.g)},
                             {"n", as_ll(inv.n)},     {"c1", divisors::to_string(family.c1())},
                             {"KL2", as_ll(inv.KL2)}, {"K2L", as_ll(inv.K2L)},
                             {"c2L", as_ll(inv.c2L)}, {"K3", as_ll(inv.K3)},
                             {"Kc2", as_ll(inv.Kc2)}, {"c3", as_ll(inv.c3)}};
    results["chi_normal"] = as_ll(chow::chi_normal(family));

    const auto component = hilbert::make_report(b, k);
    results["component"] = {{"dim", as_ll(component.dim_component)},
                            {"tau", as_ll(component.tau)},
                            {"aut_dim", as_ll(component.aut_dim)},
                            {"dim_Y_lower", as_ll(component.dim_Y_lower)},
                            {"consistent", component.consistent}};
    return results;
}

json hilbert_row(const hilbert::HilbertReport& r) {
    return json{{"b", as_ll(r.b)},
                {"k", as_ll(r.k)},
                {"d", as_ll(r.d)},
                {"g", as_ll(r.g)},
                {"n", as_ll(r.n)},
                {"dim_component", as_ll(r.dim_component)},
                {"tau", as_ll(r.tau)},
                {"aut_dim", as_ll(r.aut_dim)},
                {"dim_Y_lower", as_ll(r.dim_Y_lower)},
                {"consistent", r.consistent}};
}

struct FamilySelector {
    std::optional<long long> b;
    std::optional<long long> k;
    std::string grid_b;
    std::string grid_k;

    bool is_grid() const { return !grid_b.empty() || !grid_k.empty(); }

    void validate() const {
        if ((b || k) && is_grid())
            throw CLI::ValidationError("params", "use --b/--k or --grid-b/--grid-k, not both");
        if (is_grid() && grid_b.empty())
            throw CLI::ValidationError("params", "--grid-k requires --grid-b");
        if (!is_grid() && (!b || !k))
            throw CLI::ValidationError("params", "--b and --k are required");
    }
};

int cmd_cohom(int e, const std::vector<long long>& div, const CommonOptions& common) {
    const divisors::Surface surface(e);
    const divisors::DivisorClass d{div[0], div[1]};
    const auto coh = divisors::cohomology_divisor(d, surface);
    const json params{{"e", e}, {"div", {div[0], div[1]}}};
    const json results{{"h0", as_ll(coh.h0)},
                       {"h1", as_ll(coh.h1)},
                       {"h2", as_ll(coh.h2)},
                       {"chi", as_ll(coh.chi())}};
    emit(envelope("cohom", params, results, {}, common.seed), common);
    return 0;
}

// Fixed sweep schemas so CSV rows can stream as they are produced; gated
// families leave the later columns blank.
const std::vector<std::string> kScrollColumns = {
    "b", "k", "regime.bundle_range", "regime.scroll_range", "regime.split_regime",
    "regime.vanishing_case", "cohomology.h0A", "cohomology.h1A", "cohomology.h0B",
    "cohomology.h0E_generic", "cohomology.h1E_generic", "dim_ext1", "end_dim",
    "invariants.d", "invariants.g", "invariants.n", "invariants.c1", "invariants.KL2",
    "invariants.K2L", "invariants.c2L", "invariants.K3", "invariants.Kc2", "invariants.c3",
    "chi_normal", "component.dim", "component.tau", "component.aut_dim",
    "component.dim_Y_lower", "component.consistent"};

const std::vector<std::string> kHilbertColumns = {
    "b", "k", "d", "g", "n", "dim_component", "tau", "aut_dim", "dim_Y_lower", "consistent"};

class CsvStream {
public:
    CsvStream(std::ostream& os, std::vector<std::string> columns)
        : os_(os), columns_(std::move(columns)) {
        for (std::size_t j = 0; j < columns_.size(); ++j)
            os_ << (j ? "," : "") << csv_escape(columns_[j]);
        os_ << "\n";
    }

    void row(const json& value) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(value, "", cells);
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            std::string text;
            for (const auto& [key, cell] : cells)
                if (key == columns_[j]) text = cell;
            os_ << (j ? "," : "") << csv_escape(text);
        }
        os_ << "\n";
    }

private:
    std::ostream& os_;
    std::vector<std::string> columns_;
};

// Walks the sweep, either streaming CSV rows as they are produced or
// collecting them for the table/JSON renderers (and for --out).
int run_sweep(const std::string& query, const FamilySelector& sel,
              const std::vector<std::string>& columns,
              const std::function<void(const Integer&, GridSpec&)>& default_k,
              const std::function<std::optional<json>(const Integer&, const Integer&,
                                                      std::vector<std::string>&)>& make_row,
              const CommonOptions& common) {
    std::vector<std::string> warnings;
    const GridSpec bs = parse_range(sel.grid_b);
    const bool stream = common.format == "csv" && common.out_file.empty();
    std::optional<CsvStream> csv;
    if (stream) csv.emplace(std::cout, columns);

    json rows = json::array();
    for (Integer b = bs.lo; b <= bs.hi; ++b) {
        GridSpec ks = sel.grid_k.empty() ? GridSpec{b, b} : parse_range(sel.grid_k);
        default_k(b, ks);
        for (Integer k = ks.lo; k <= ks.hi; ++k) {
            const auto row = make_row(b, k, warnings);
            if (!row) continue;
            if (stream)
                csv->row(*row);
            else
                rows.push_back(*row);
        }
    }
    if (stream) {
        for (const auto& warning : warnings) std::cout << "warning: " << warning << "\n";
        return 0;
    }
    const json params{{"grid_b", sel.grid_b}, {"grid_k", sel.grid_k}};
    emit(envelope(query, params, json{{"rows", rows}}, warnings, common.seed), common);
    return 0;
}

int cmd_scroll(const FamilySelector& sel, const CommonOptions& common) {
    sel.validate();
    if (!sel.is_grid()) {
        std::vector<std::string> warnings;
        const json results = scroll_results(*sel.b, *sel.k, warnings);
        emit(envelope("scroll", json{{"b", *sel.b}, {"k", *sel.k}}, results, warnings,
                      common.seed),
             common);
        return 0;
    }
    return run_sweep(
        "scroll", sel, kScrollColumns,
        [&sel](const Integer& b, GridSpec& ks) {
            if (sel.grid_k.empty()) ks = GridSpec{b, 4 * b};
        },
        [](const Integer& b, const Integer& k, std::vector<std::string>& warnings) {
            return std::optional<json>(scroll_results(b, k, warnings));
        },
        common);
}

int cmd_hilbert(const FamilySelector& sel, const CommonOptions& common) {
    sel.validate();
    if (!sel.is_grid()) {
        std::vector<std::string> warnings;
        const auto report = hilbert::make_report(*sel.b, *sel.k);
        emit(envelope("hilbert", json{{"b", *sel.b}, {"k", *sel.k}}, hilbert_row(report),
                      warnings, common.seed),
             common);
        return 0;
    }
    return run_sweep(
        "hilbert", sel, kHilbertColumns,
        [&sel](const Integer& b, GridSpec& ks) {
            if (sel.grid_k.empty()) ks = GridSpec{b, 4 * b - 8};
            if (ks.lo < b) ks.lo = b;
            if (ks.hi > 4 * b - 8) ks.hi = 4 * b - 8;
        },
        [](const Integer& b, const Integer& k,
           std::vector<std::string>& warnings) -> std::optional<json> {
            if (b < 5) {
                warnings.push_back("b=" + b.str() + " < 5 is outside the component grid; skipped");
                return std::nullopt;
            }
            return hilbert_row(hilbert::make_report(b, k));
        },
        common);
}

int cmd_f0(std::optional<long long> k, const CommonOptions& common) {
    json rows = json::array();
    std::vector<std::string> warnings;
    const Integer lo = k ? Integer(*k) : Integer(7);
    const Integer hi = k ? Integer(*k) : Integer(10);
    bool flagged = false;
    for (Integer kk = lo; kk <= hi; ++kk) {
        const auto inv = hilbert::f0_invariants(kk);
        rows.push_back(json{{"k", as_ll(inv.k)},
                            {"d", as_ll(inv.d)},
                            {"n", as_ll(inv.n)},
                            {"dim_component", as_ll(inv.dim_component)},
                            {"dim_proj_ext", as_ll(inv.dim_proj_ext)},
                            {"identity_holds", inv.identity_holds},
                            {"n_outside_advertised_range", inv.n_outside_advertised_range}});
        flagged = flagged || inv.n_outside_advertised_range;
    }
    if (flagged)
        warnings.push_back(
            "n = 16-k lands in 6..9 while the advertised ambient range is 7..10 (documented "
            "discrepancy, not a failure)");
    json params;
    if (k) params["k"] = *k;
    emit(envelope("f0", params, json{{"rows", rows}}, warnings, common.seed), common);
    return 0;
}

int cmd_oracle(long long b_in, long long k_in, int trials, const Integer& coeff_bound,
               bool unstructured, const CommonOptions& common) {
    const Integer b(b_in);
    const Integer k(k_in);
    std::vector<std::string> warnings;
    if (!(b <= k && k <= 4 * b - 1))
        warnings.push_back("(b,k) outside the covered range b <= k <= 4b-1; results reported "
                           "without a genericity guarantee");

    const auto mode =
        unstructured ? cech::SampleMode::unstructured : cech::SampleMode::structured;
    const auto generic =
        cech::generic_extension_cohomology(b, k, trials, common.seed, coeff_bound, mode);

    json results{{"mode", unstructured ? "unstructured" : "structured"},
                 {"h0", as_ll(generic.h0)},
                 {"h1", as_ll(generic.h1)},
                 {"achieved_rank", as_ll(generic.certificate.achieved_rank)},
                 {"theoretical_max", as_ll(generic.certificate.theoretical_max)},
                 {"trials_used", generic.certificate.trials_used},
                 {"certified", generic.certificate.certified}};

    if (!unstructured) {
        // Recover the splitting type from the best sampled class.
        Integer best_rank = -1;
        std::optional<cech::StructuredExtension> best;
        for (int trial = 0; trial < generic.certificate.trials_used; ++trial) {
            auto sample = cech::sample_extension(
                b, k, derive_seed(common.seed, static_cast<std::uint64_t>(trial)), coeff_bound);
            const Integer rank(cech::exact_rank(cech::coboundary_matrix(sample)));
            if (rank > best_rank) {
                best_rank = rank;
                best = std::move(sample);
            }
        }
        const auto type = cech::splitting_type_of_extension(*best);
        results["splitting_type"] = p1::to_string(type);
        results["balanced"] = type == p1::balanced_partition(4 * b - k - 6, 5);
    }

    const json params{{"b", b_in},
                      {"k", k_in},
                      {"trials", trials},
                      {"coeff_bound", as_ll(coeff_bound)},
                      {"seed", common.seed}};
    emit(envelope("oracle", params, results, warnings, common.seed), common);
    return 0;
}

int cmd_verify(const verify::Options& options, const CommonOptions& common) {
    const auto report = verify::run_all(options);

    json checks = json::array();
    for (const auto& check : report.checks)
        checks.push_back(json{{"id", check.id},
                              {"claim", check.claim},
                              {"status", verify::to_string(check.status)},
                              {"expected", check.expected},
                              {"actual", check.actual},
                              {"note", check.note},
                              {"millis", check.millis}});
    const json results{{"checks", checks},
                       {"summary",
                        {{"passed", report.passed},
                         {"failed", report.failed},
                         {"skipped", report.skipped}}}};
    const json params{{"trials", options.trials},
                      {"coeff_bound", as_ll(options.coeff_bound)},
                      {"negative_control", options.negative_control}};
    const json full = envelope("verify-paper", params, results, {}, options.seed);

    if (common.format == "json") {
        emit(full, common);
    } else if (common.format == "csv") {
        print_rows(std::cout, checks, "csv");
        if (!common.out_file.empty()) {
            std::ofstream out(common.out_file);
            if (!out) throw std::runtime_error("cannot write " + common.out_file);
            out << full.dump(2) << "\n";
        }
    } else {
        for (const auto& check : report.checks) {
            std::cout << (check.status == verify::Status::pass   ? "PASS "
                          : check.status == verify::Status::fail ? "FAIL "
                                                                 : "SKIP ")
                      << check.id << " (" << check.millis << " ms)  " << check.actual << "\n";
            if (!check.note.empty()) std::cout << "     note: " << check.note << "\n";
        }
        std::cout << "passed " << report.passed << ", failed " << report.failed << ", skipped "
                  << report.skipped << "\n";
        if (!common.out_file.empty()) {
            std::ofstream out(common.out_file);
            if (!out) throw std::runtime_error("cannot write " + common.out_file);
            out << full.dump(2) << "\n";
        }
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology, scroll invariants and component dimensions over "
                 "Hirzebruch surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    CommonOptions common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    app.add_option("--out", common.out_file, "also write the JSON report to FILE");
    app.add_option("--seed", common.seed, "seed for the deterministic sampler")
        ->capture_default_str();

    auto* cohom = app.add_subcommand("cohom", "cohomology of a divisor class on F_e");
    int cohom_e = 1;
    std::vector<long long> cohom_div;
    cohom->add_option("--e", cohom_e, "Hirzebruch invariant e >= 0")->required();
    cohom->add_option("--div", cohom_div, "divisor class a,b meaning a*C0 + b*f")
        ->delimiter(',')
        ->expected(2)
        ->required();

    auto* scroll_cmd = app.add_subcommand("scroll", "full report for the family E(b, k)");
    FamilySelector scroll_sel;
    long long scroll_b = 0, scroll_k = 0;
    auto* sb = scroll_cmd->add_option("--b", scroll_b, "c1 fiber coefficient");
    auto* sk = scroll_cmd->add_option("--k", scroll_k, "c2");
    scroll_cmd->add_option("--grid-b", scroll_sel.grid_b, "sweep lo..hi over b");
    scroll_cmd->add_option("--grid-k", scroll_sel.grid_k, "sweep lo..hi over k");

    auto* oracle = app.add_subcommand(
        "oracle", "sampled coboundary ranks: generic cohomology and splitting type");
    long long oracle_b = 0, oracle_k = 0;
    int oracle_trials = 5;
    long long oracle_bound = 100;
    bool oracle_unstructured = false;
    oracle->add_option("--b", oracle_b)->required();
    oracle->add_option("--k", oracle_k)->required();
    oracle->add_option("--trials", oracle_trials, "number of sampled classes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->add_option("--coeff-bound", oracle_bound, "coefficients drawn from [-bound, bound]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->add_flag("--unstructured", oracle_unstructured,
                     "sample the full extension space of the direct images instead of the "
                     "classes induced from the surface");

    auto* hilb = app.add_subcommand("hilbert", "component dimension report");
    FamilySelector hilbert_sel;
    long long hilbert_b = 0, hilbert_k = 0;
    auto* hb = hilb->add_option("--b", hilbert_b);
    auto* hk = hilb->add_option("--k", hilbert_k);
    hilb->add_option("--grid-b", hilbert_sel.grid_b, "sweep lo..hi over b");
    hilb->add_option("--grid-k", hilbert_sel.grid_k, "sweep lo..hi over k");

    auto* f0 = app.add_subcommand("f0", "quadric-base examples (k in 7..10)");
    long long f0_k = 0;
    auto* f0k = f0->add_option("--k", f0_k, "single k; omit for all of 7..10");

    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "run the full cross-validation suite; exit 0 iff every check passes");
    verify::Options verify_options;
    std::string verify_grid_b, verify_grid_k;
    long long verify_bound = 100;
    verify_cmd->add_option("--trials", verify_options.trials)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--coeff-bound", verify_bound)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid-b", verify_grid_b, "restrict sweeps to lo..hi in b");
    verify_cmd->add_option("--grid-k", verify_grid_k, "restrict sweeps to lo..hi in k");
    verify_cmd->add_flag("--negative-control", verify_options.negative_control,
                         "perturb one expected constant; the run must then fail");

    try {
        app.parse(argc, argv);

        if (cohom->parsed()) return cmd_cohom(cohom_e, cohom_div, common);
        if (scroll_cmd->parsed()) {
            if (sb->count()) scroll_sel.b = scroll_b;
            if (sk->count()) scroll_sel.k = scroll_k;
            return cmd_scroll(scroll_sel, common);
        }
        if (oracle->parsed())
            return cmd_oracle(oracle_b, oracle_k, oracle_trials, Integer(oracle_bound),
                              oracle_unstructured, common);
        if (hilb->parsed()) {
            if (hb->count()) hilbert_sel.b = hilbert_b;
            if (hk->count()) hilbert_sel.k = hilbert_k;
            return cmd_hilbert(hilbert_sel, common);
        }
        if (f0->parsed())
            return cmd_f0(f0k->count() ? std::optional<long long>(f0_k) : std::nullopt, common);
        if (verify_cmd->parsed()) {
            verify_options.seed = common.seed;
            verify_options.coeff_bound = verify_bound;
            if (!verify_grid_b.empty()) {
                const auto range = parse_range(verify_grid_b);
                verify_options.grid_b = verify::GridRange{range.lo, range.hi};
            }
            if (!verify_grid_k.empty()) {
                const auto range = parse_range(verify_grid_k);
                verify_options.grid_k = verify::GridRange{range.lo, range.hi};
            }
            return cmd_verify(verify_options, common);
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
