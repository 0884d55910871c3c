// cliffrad: exact Clifford-analysis series, Radon / dual Radon transforms,
// constant tables and verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "cliffrad/json_io.hpp"
#include "cliffrad/verify.hpp"

namespace {

using namespace cliffrad;

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitValidation = 3;

struct ConstantRow {
    int a = 0;  // first index (alpha, j, k or J depending on table)
    int b = 0;
    int c = 0;  // auxiliary index (slice-side j for the c table)
    bool has_c = false;
    ExactScalar value;
};

std::vector<ConstantRow> constants_table(const std::string& table, int n, int max_degree) {
    std::vector<ConstantRow> rows;
    if (table == "B") {
        for (int k = 0; k <= max_degree; ++k)
            for (int alpha = -k; alpha + k <= max_degree; ++alpha)
                rows.push_back({alpha, k, 0, false, B_const(alpha, k, n)});
    } else if (table == "A") {
        for (int k = 0; k <= max_degree; ++k)
            for (int alpha = k + 1; alpha <= k + max_degree; ++alpha)
                rows.push_back({alpha, k, 0, false, A_const(alpha, k, n)});
    } else if (table == "mu") {
        for (int j = 0; j <= max_degree; ++j)
            for (int k = 0; k <= max_degree; ++k)
                rows.push_back({j, k, 0, false, ExactScalar(mu_const(j, k, n))});
    } else if (table == "c") {
        // c_{k,j}: j is the Taylor-side index, j+k the slice-side power.
        for (int k = 0; k <= max_degree; ++k)
            for (int j = 0; j <= max_degree; ++j)
                rows.push_back({k, j, j + k, true, c_const(k, j, n)});
    } else if (table == "d") {
        for (int k = 0; k <= max_degree; ++k)
            for (int J = 0; J <= max_degree; ++J)
                rows.push_back({k, J, -(J + 1 + k), true, d_const(k, J, n)});
    } else {
        throw CLI::ValidationError("--table", "unknown table '" + table + "'");
    }
    return rows;
}

const char* table_headers(const std::string& table) {
    if (table == "B") return "alpha,k";
    if (table == "A") return "alpha,k";
    if (table == "mu") return "j,k";
    if (table == "c") return "k,j,slice_j";
    return "k,J,slice_j";
}

int cmd_constants(const std::string& table, int n, int max_degree, const std::string& format,
                  const std::string& out_path) {
    auto rows = constants_table(table, n, max_degree);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitBadParams;
        }
        os = &file;
    }
    if (format == "csv") {
        *os << table_headers(table) << ",exact,float\n";
        for (const auto& r : rows) {
            *os << r.a << "," << r.b << ",";
            if (r.has_c) *os << r.c << ",";
            *os << r.value.to_string() << "," << r.value.to_double() << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            row["i"] = r.a;
            row["j"] = r.b;
            if (r.has_c) row["slice_j"] = r.c;
            row["exact"] = r.value.to_string();
            row["float"] = r.value.to_double();
            arr.push_back(std::move(row));
        }
        nlohmann::json doc;
        doc["table"] = table;
        doc["n"] = n;
        doc["max_degree"] = max_degree;
        doc["rows"] = std::move(arr);
        *os << doc.dump(2) << "\n";
    }
    return 0;
}

// Relaxed reading for the data-level transforms (fischer, ck): the terms
// encode x_vec^j * Q with Q only homogeneity-checked.
ExactPoly initial_datum_from_file(const SeriesFileData& data) {
    const ExactPoly xv = ExactPoly::vector_variable(data.n, Arity::Vector);
    ExactPoly acc(data.n, Arity::Vector);
    for (const auto& t : data.terms) {
        int d = 0;
        if (!t.poly.is_homogeneous(&d) || (!t.poly.is_zero() && d != t.k))
            throw SeriesValidationError("term polynomial is not k-homogeneous");
        if (t.j < 0) throw SeriesValidationError("initial datum terms need j >= 0");
        acc += xv.pow(t.j) * t.poly;
    }
    return acc;
}

MonogenicSeries taylor_coefficients_of(const ExactPoly& datum) {
    const int n = datum.n();
    MonogenicSeries out(n, SeriesPart::Taylor);
    std::map<int, ExactPoly> parts;
    for (const auto& [key, c] : datum.terms()) {
        int d = 0;
        for (int e : key) d += e;
        parts.try_emplace(d, ExactPoly(n, Arity::Vector)).first->second.add_term(key, c);
    }
    for (const auto& [d, poly] : parts) {
        auto fis = fischer_decompose(poly);
        for (int j = 0; j <= d; ++j)
            if (!fis[j].poly.is_zero()) out.add_term(j, d - j, fis[j].poly);
    }
    return out;
}

int cmd_apply(const std::string& transform, const std::string& in_path,
              const std::string& out_path) {
    SeriesFileData in = read_series_file(in_path);
    SeriesFileData out;
    if (transform == "dual-radon") {
        if (in.kind != "slice") throw SeriesFormatError("dual-radon requires a slice series");
        out = from_monogenic_series(dual_radon_symbolic(to_slice_series(in)));
    } else if (transform == "radon") {
        if (in.kind != "laurent") throw SeriesFormatError("radon requires a laurent series");
        out = from_slice_series(radon_symbolic(to_monogenic_series(in)));
    } else if (transform == "i2") {
        if (in.kind != "slice") throw SeriesFormatError("i2 requires a slice series");
        out = from_slice_series(invert_I2(to_slice_series(in)));
    } else if (transform == "in1") {
        if (in.kind != "taylor" && in.kind != "laurent")
            throw SeriesFormatError("in1 requires a taylor or laurent series");
        out = from_monogenic_series(invert_In1(to_monogenic_series(in)));
    } else if (transform == "ck" || transform == "fischer") {
        // Both canonicalize polynomial initial data into Taylor coefficients:
        // fischer emits the decomposition, ck the CK-extension coefficients
        // (identical at the coefficient level since CK(x^j P) = X^(j) P).
        if (in.kind != "taylor")
            throw SeriesFormatError(transform + " requires a taylor-kind data file");
        out = from_monogenic_series(taylor_coefficients_of(initial_datum_from_file(in)));
    } else {
        std::cerr << "unknown transform '" << transform << "'\n";
        return kExitBadParams;
    }
    write_series_file(out_path, out);
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& report_path) {
    std::vector<CheckResult> results;
    if (suite == "constants")
        results = suite_constants(opts);
    else if (suite == "dual-radon")
        results = suite_dual_radon(opts);
    else if (suite == "radon")
        results = suite_radon(opts);
    else if (suite == "roundtrip")
        results = suite_roundtrip(opts);
    else if (suite == "monogenicity")
        results = suite_monogenicity(opts);
    else if (suite == "intertwine")
        results = suite_intertwine(opts);
    else if (suite == "all")
        results = suite_all(opts);
    else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitBadParams;
    }

    bool all_pass = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        all_pass &= r.pass;
        nlohmann::json row;
        row["name"] = r.name;
        row["status"] = r.pass ? "pass" : "fail";
        row["max_deviation"] = r.max_dev;
        row["tolerance"] = r.tol;
        row["wall_ms"] = r.millis;
        arr.push_back(std::move(row));
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  dev=" << r.max_dev
                  << " tol=" << r.tol << " (" << r.millis << " ms)\n";
    }
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["n"] = opts.n;
    doc["max_degree"] = opts.max_degree;
    doc["seed"] = opts.seed;
    doc["checks"] = std::move(arr);
    doc["all_pass"] = all_pass;
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) {
            std::cerr << "cannot open report file: " << report_path << "\n";
            return kExitBadParams;
        }
        f << doc.dump(2) << "\n";
    }
    return all_pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radon and dual Radon transforms for Clifford-algebra-valued series"};
    app.require_subcommand(1);

    // constants
    std::string table, format = "csv", out_path;
    int n = 3, max_degree = 6;
    auto* constants = app.add_subcommand("constants", "emit exact constant tables");
    constants->add_option("--table", table, "B|A|mu|c|d")->required();
    constants->add_option("--n", n, "dimension (2..8)")->check(CLI::Range(2, 8));
    constants->add_option("--max-degree", max_degree, "grid size")->check(CLI::Range(0, 64));
    constants->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    constants->add_option("--out", out_path, "output file (default stdout)");

    // apply
    std::string transform, in_path, apply_out;
    auto* apply = app.add_subcommand("apply", "apply a transform to a series file");
    apply->add_option("--transform", transform, "dual-radon|radon|i2|in1|ck|fischer")->required();
    apply->add_option("--in", in_path, "input series JSON")->required();
    apply->add_option("--out", apply_out, "output series JSON")->required();

    // verify
    std::string suite, report_path;
    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite,
                       "constants|dual-radon|radon|roundtrip|monogenicity|intertwine|all")
        ->required();
    verify->add_option("--n", vopts.n, "dimension")->check(CLI::Range(2, 8));
    verify->add_option("--max-degree", vopts.max_degree, "degree cap")->check(CLI::Range(1, 16));
    verify->add_option("--seed", vopts.seed, "seed for randomized checks");
    verify->add_option("--report", report_path, "JSON report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadParams;
    }

    try {
        if (constants->parsed()) return cmd_constants(table, n, max_degree, format, out_path);
        if (apply->parsed()) return cmd_apply(transform, in_path, apply_out);
        if (verify->parsed()) return cmd_verify(suite, vopts, report_path);
    } catch (const cliffrad::SeriesValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const cliffrad::SeriesFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}
