#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "stirmix/bounded.hpp"
#include "stirmix/egf.hpp"
#include "stirmix/exact_core.hpp"
#include "stirmix/mixed.hpp"
#include "stirmix/oracle.hpp"
#include "stirmix/verify.hpp"
#include "stirmix/version.hpp"

namespace {

using namespace stirmix;

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
};

// "3..7" or a single value "4"
Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
        return r;
    }
    r.lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    r.hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (r.hi < r.lo) throw CLI::ValidationError("range", "upper end below lower end");
    return r;
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty()) throw CLI::ValidationError("list", "expected comma-separated numbers");
    return out;
}

SizeBand band_from(unsigned lo, unsigned hi_flag) {
    // hi_flag == 0 means "no upper bound" (sizes are never 0)
    if (hi_flag == 0) return SizeBand::make(lo, std::nullopt);
    return SizeBand::make(lo, hi_flag);
}

MixedAlgorithm parse_algorithm(const std::string& name) {
    if (name == "closed-form") return MixedAlgorithm::closed_form;
    if (name == "convolution") return MixedAlgorithm::convolution;
    if (name == "element") return MixedAlgorithm::element_recurrence;
    if (name == "three-case") return MixedAlgorithm::three_case;
    throw CLI::ValidationError("--algorithm",
                               "expected closed-form, convolution, element or three-case");
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const std::string& family, unsigned n, unsigned k, unsigned r, unsigned lo,
                unsigned hi, const std::string& algorithm, const std::vector<unsigned>& cells,
                const std::vector<unsigned>& empty_ok) {
    const SizeBand band = band_from(lo, hi);
    Nat value;
    if (family == "stirling") {
        value = stirling2(n, k);
    } else if (family == "stirling-explicit") {
        value = stirling2_explicit(n, k);
    } else if (family == "stirling-howard") {
        value = stirling2_howard(n, k);
    } else if (family == "bell") {
        value = bell(n);
    } else if (family == "bell-le") {
        value = bell_le(n, hi);
    } else if (family == "r-stirling") {
        value = r_stirling(n, k, r);
    } else if (family == "r-stirling-via-mixed") {
        value = r_stirling_from_mixed(n, k, r);
    } else if (family == "stirling-le") {
        value = stirling_le(n, k, hi);
    } else if (family == "stirling-ge") {
        value = stirling_ge(n, k, lo);
    } else if (family == "stirling-band") {
        value = stirling_band(n, k, band);
    } else if (family == "stirling-le-cumulative") {
        value = stirling_le_cumulative(n, k, hi);
    } else if (family == "mixed") {
        value = mixed_stirling({n, k, r, band}, parse_algorithm(algorithm));
    } else if (family == "mixed-bell") {
        value = mixed_bell(n, k, r);
    } else if (family == "mixed-cells") {
        CellSpec spec = CellSpec::strict(cells);
        for (unsigned label : empty_ok) spec.allow_empty(label - 1);
        value = empty_ok.empty() ? mixed_count(n, spec, band)
                                 : mixed_count_relaxed(n, spec, band);
    } else {
        throw CLI::ValidationError("--family", "unknown family " + family);
    }
    std::cout << value.str() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// table

Nat table_value(const std::string& family, unsigned n, unsigned second, const SizeBand& band,
                bool mixed_fixed_k, unsigned fixed) {
    if (family == "mixed") {
        // fixed r with k varying, or fixed k with r varying
        return mixed_fixed_k ? mixed_stirling({n, fixed, second, band})
                             : mixed_stirling({n, second, fixed, band});
    }
    if (family == "stirling") return stirling2(n, second);
    if (family == "stirling-band") return stirling_band(n, second, band);
    throw CLI::ValidationError("--family", "table supports mixed, stirling, stirling-band");
}

int run_table(const std::string& family, const std::string& n_range, const std::string& k_text,
              const std::string& r_text, bool k_given, bool r_given, unsigned lo, unsigned hi,
              const std::string& format) {
    const SizeBand band = band_from(lo, hi);
    const Range ns = parse_range(n_range);

    bool mixed_fixed_k = false;
    unsigned fixed = 0;
    Range cols{};
    std::string col_name = "k";
    if (family == "mixed") {
        // the fixed axis is a plain number, the varying one a range "a..b"
        if (!k_given || !r_given) {
            throw CLI::ValidationError("table", "mixed tables need both --k and --r");
        }
        const bool k_is_range = k_text.find("..") != std::string::npos;
        const bool r_is_range = r_text.find("..") != std::string::npos;
        if (k_is_range == r_is_range) {
            throw CLI::ValidationError("table",
                                       "mixed tables fix one of --k / --r and range the other");
        }
        if (k_is_range) {
            fixed = parse_range(r_text).lo;
            cols = parse_range(k_text);
            col_name = "k";
        } else {
            mixed_fixed_k = true;
            fixed = parse_range(k_text).lo;
            cols = parse_range(r_text);
            col_name = "r";
        }
    } else {
        cols = parse_range(k_text);
    }

    if (format == "csv") {
        std::cout << "n," << col_name << ",value\n";
        for (unsigned n = ns.lo; n <= ns.hi; ++n)
            for (unsigned c = cols.lo; c <= cols.hi; ++c) {
                std::cout << n << ',' << c << ','
                          << table_value(family, n, c, band, mixed_fixed_k, fixed).str() << '\n';
            }
        return 0;
    }
    if (format != "text") throw CLI::ValidationError("--format", "expected csv or text");

    // aligned grid, blank where the count is zero
    std::vector<std::vector<std::string>> grid;
    std::size_t width = 1;
    for (unsigned n = ns.lo; n <= ns.hi; ++n) {
        std::vector<std::string> row;
        for (unsigned c = cols.lo; c <= cols.hi; ++c) {
            const Nat v = table_value(family, n, c, band, mixed_fixed_k, fixed);
            row.push_back(v == 0 ? "" : v.str());
            width = std::max(width, row.back().size());
        }
        grid.push_back(std::move(row));
    }
    auto pad = [&](const std::string& s) {
        std::cout << s;
        for (std::size_t i = s.size(); i < width + 2; ++i) std::cout << ' ';
    };
    pad("n\\" + col_name);
    for (unsigned c = cols.lo; c <= cols.hi; ++c) pad(std::to_string(c));
    std::cout << '\n';
    for (unsigned n = ns.lo; n <= ns.hi; ++n) {
        pad(std::to_string(n));
        for (const auto& cell : grid[n - ns.lo]) pad(cell);
        std::cout << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// egf

int run_egf(const std::string& family, unsigned k, unsigned r, unsigned lo, unsigned hi,
            const std::vector<unsigned>& cells, unsigned order) {
    const SizeBand band = band_from(lo, hi);
    Series s(order);
    if (family == "stirling-band") {
        s = egf_stirling_band(k, band, order);
    } else if (family == "mixed") {
        s = egf_mixed(MixedParams{0, k, r, band}, order);
    } else if (family == "mixed-cells") {
        s = egf_mixed(CellSpec::strict(cells), band, order);
    } else if (family == "block-class") {
        s = series_block_class(band, order);
    } else {
        throw CLI::ValidationError("--family",
                                   "egf supports stirling-band, mixed, mixed-cells, block-class");
    }
    std::cout << series_to_text(s);
    return 0;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle(unsigned n, const std::vector<unsigned>& cells, unsigned lo, unsigned hi,
               unsigned prefix, bool label1_empty_ok, const std::vector<unsigned>& empty_ok,
               bool all_empty_ok, bool list, unsigned cap) {
    CellSpec spec = CellSpec::strict(cells);
    if (all_empty_ok) spec.allow_empty_everywhere();
    if (label1_empty_ok) spec.allow_empty(0);
    for (unsigned label : empty_ok) spec.allow_empty(label - 1);
    const OracleQuery q{n, spec, band_from(lo, hi), prefix, cap};
    if (list) {
        for (const auto& p : oracle_enumerate(q)) std::cout << to_string(p) << '\n';
        return 0;
    }
    std::cout << oracle_count(q).str() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(unsigned max_n, unsigned max_k, unsigned max_r, const std::string& ms_text,
               const std::string& ls_text, const std::string& format, const std::string& out_path,
               bool strict) {
    GridLimits grid;
    grid.max_n = max_n;
    grid.max_k = max_k;
    grid.max_r = max_r;
    if (!ms_text.empty()) {
        grid.ms.clear();
        std::stringstream ss(ms_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "inf") {
                grid.ms.push_back(std::nullopt);
            } else if (!item.empty()) {
                grid.ms.push_back(static_cast<unsigned>(std::stoul(item)));
            }
        }
    }
    if (!ls_text.empty()) grid.ls = parse_uint_list(ls_text);
    if (format != "json" && format != "text") {
        throw CLI::ValidationError("--format", "expected text or json");
    }

    const VerificationReport report = run_suite(grid);

    const std::string rendered =
        format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
        out << rendered;
    }
    if (strict && !report.all_as_expected()) {
        std::cerr << "verify: some cases did not match their expected verdicts\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact set-partition counting: banded, mixed and r-Stirling families"};
    app.set_version_flag("--version", stirmix::kEngineVersion);
    app.require_subcommand(1);

    // shared option storage
    std::string family = "mixed", algorithm = "closed-form", format = "csv";
    std::string n_range = "0", k_range = "1", r_range = "1", ms_text, ls_text, out_path;
    unsigned n = 0, k = 1, r = 1, lo = 1, hi = 0, order = 10, prefix = 0;
    unsigned cap = stirmix::kOracleDefaultCap;
    unsigned max_n = 10, max_k = 5, max_r = 5;
    std::vector<unsigned> cells, empty_ok;
    bool label1_empty_ok = false, all_empty_ok = false, list = false, strict = false;

    auto* compute = app.add_subcommand("compute", "print one exact count");
    compute->add_option("--family", family, "value family")->required();
    compute->add_option("--n", n, "number of elements")->required();
    compute->add_option("--k", k, "number of blocks / labels");
    compute->add_option("--r", r, "label-1 cell count (or distinct prefix)");
    compute->add_option("--min", lo, "minimum block size");
    compute->add_option("--max", hi, "maximum block size (0 = unbounded)");
    compute->add_option("--algorithm", algorithm,
                        "closed-form | convolution | element | three-case");
    compute->add_option("--cells", cells, "cell counts per label (mixed-cells)")->delimiter(',');
    compute->add_option("--empty-ok", empty_ok, "1-based labels whose cells may stay empty")
        ->delimiter(',');

    auto* table = app.add_subcommand("table", "emit a value grid");
    table->add_option("--family", family, "mixed | stirling | stirling-band")->required();
    table->add_option("--n", n_range, "row range, e.g. 2..6")->required();
    auto* k_opt = table->add_option("--k", k_range, "column range (or fixed k for mixed)");
    auto* r_opt = table->add_option("--r", r_range, "column range (mixed with fixed k)");
    table->add_option("--min", lo, "minimum block size");
    table->add_option("--max", hi, "maximum block size (0 = unbounded)");
    table->add_option("--format", format, "csv | text");

    auto* egf = app.add_subcommand("egf", "dump exact series coefficients");
    egf->add_option("--family", family, "stirling-band | mixed | mixed-cells | block-class")
        ->required();
    egf->add_option("--k", k, "number of blocks / labels");
    egf->add_option("--r", r, "label-1 cell count");
    egf->add_option("--min", lo, "minimum block size");
    egf->add_option("--max", hi, "maximum block size (0 = unbounded)");
    egf->add_option("--cells", cells, "cell counts per label")->delimiter(',');
    egf->add_option("--order", order, "truncation order")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force count or enumerate configurations");
    oracle->add_option("--n", n, "number of elements")->required();
    oracle->add_option("--cells", cells, "cell counts per label")->required()->delimiter(',');
    oracle->add_option("--min", lo, "minimum block size");
    oracle->add_option("--max", hi, "maximum block size (0 = unbounded)");
    oracle->add_option("--prefix-distinct", prefix, "first elements forced into distinct cells");
    oracle->add_flag("--label1-empty-ok", label1_empty_ok, "cells of label 1 may stay empty");
    oracle->add_option("--empty-ok", empty_ok, "1-based labels whose cells may stay empty")
        ->delimiter(',');
    oracle->add_flag("--all-empty-ok", all_empty_ok, "every cell may stay empty");
    oracle->add_flag("--list", list, "list configurations instead of counting");
    oracle->add_option("--cap", cap, "explosion guard on n");

    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--max-n", max_n, "grid bound on n");
    verify->add_option("--max-k", max_k, "grid bound on k");
    verify->add_option("--max-r", max_r, "grid bound on r");
    verify->add_option("--ms", ms_text, "upper size bounds, e.g. 2,3,4,inf");
    verify->add_option("--ls", ls_text, "lower size bounds, e.g. 1,2,3");
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "text | json");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--strict", strict, "exit non-zero when any verdict is unexpected");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(family, n, k, r, lo, hi, algorithm, cells, empty_ok);
        if (table->parsed())
            return run_table(family, n_range, k_range, r_range, k_opt->count() > 0,
                             r_opt->count() > 0, lo, hi, format);
        if (egf->parsed()) return run_egf(family, k, r, lo, hi, cells, order);
        if (oracle->parsed())
            return run_oracle(n, cells, lo, hi, prefix, label1_empty_ok, empty_ok, all_empty_ok,
                              list, cap);
        if (verify->parsed())
            return run_verify(max_n, max_k, max_r, ms_text, ls_text, verify_format, out_path,
                              strict);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
