#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cliffrad/json_io.hpp"
#include "test_utils.hpp"

using namespace cliffrad;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    const char* bin = std::getenv("CLIFFRAD_BIN");
    if (!bin) return -1;
    std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string cli_stdout(const std::string& args, const fs::path& tmp) {
    const char* bin = std::getenv("CLIFFRAD_BIN");
    if (!bin) return {};
    fs::path out = tmp / "stdout.txt";
    std::string cmd = std::string(bin) + " " + args + " > " + out.string() + " 2>/dev/null";
    if (std::system(cmd.c_str()) == -1) return {};
    return slurp(out);
}

SeriesFileData p1_slice_file(int j, int k) {
    // P1 = x2 e1 + x1 e2
    ExactPoly p(2, Arity::Vector);
    p.add_term({0, 1}, Multivector<ExactScalar>::basis_vector(2, 1));
    p.add_term({1, 0}, Multivector<ExactScalar>::basis_vector(2, 2));
    SeriesFileData data;
    data.n = 2;
    data.kind = "slice";
    SeriesFileTerm t;
    t.j = j;
    t.k = k;
    t.poly = p;
    data.terms.push_back(std::move(t));
    return data;
}

}  // namespace

int main() {
    TestRunner test;
    const bool have_bin = std::getenv("CLIFFRAD_BIN") != nullptr;
    fs::path tmp = fs::temp_directory_path() / "cliffrad_cli_test";
    fs::create_directories(tmp);

    // --- SeriesFile byte stability under load -> save
    {
        SeriesFileData data = p1_slice_file(0, 1);
        std::string once = series_file_to_string(data);
        SeriesFileData reload = series_file_from_json(nlohmann::json::parse(once));
        std::string twice = series_file_to_string(reload);
        test.expect_true(once == twice, "load -> save is byte-stable");
        test.expect_true(once.find("\"kind\": \"slice\"") != std::string::npos,
                         "kind serialized");
        test.expect_true(once.find("p/q") == std::string::npos, "no literal placeholders");
    }

    // --- validation behavior
    {
        SeriesFileData good = p1_slice_file(0, 1);
        test.expect_no_throw([&] { to_slice_series(good); }, "valid file loads");

        SeriesFileData bad = good;
        bad.terms[0].poly = ExactPoly(2, Arity::Vector);
        bad.terms[0].poly.add_term({1, 0},
                                   Multivector<ExactScalar>::scalar(2, ExactScalar::one()));
        test.expect_throw<SeriesValidationError>([&] { to_slice_series(bad); },
                                                 "non-monogenic poly rejected");

        SeriesFileData wrong_kind = good;
        wrong_kind.kind = "taylor";
        test.expect_throw<SeriesFormatError>([&] { to_slice_series(wrong_kind); },
                                             "kind mismatch raises a format error");

        // pi-carrying coefficients round-trip (odd-n Radon images need them)
        ExactPoly pp = ExactPoly::constant_scalar(3, Arity::Vector, ExactScalar(Rational(2), 2));
        SeriesFileData pidoc;
        pidoc.n = 3;
        pidoc.kind = "slice";
        SeriesFileTerm t;
        t.j = -1;
        t.k = 0;
        t.poly = pp;
        pidoc.terms.push_back(t);
        std::string s = series_file_to_string(pidoc);
        SeriesFileData back = series_file_from_json(nlohmann::json::parse(s));
        test.expect_true(back.terms[0].poly == pp, "pi^(h/2) coefficients survive the file");
    }

    if (!have_bin) {
        std::cout << "CLIFFRAD_BIN not set; skipping binary-level checks" << std::endl;
        test.summary();
        return test.all_passed() ? 0 : 1;
    }

    // --- constants tables
    {
        std::string csv = cli_stdout("constants --table B --n 3 --max-degree 4", tmp);
        test.expect_true(csv.find("alpha,k,exact,float") == 0, "B table has a CSV header");
        test.expect_true(csv.find("0,0,1/1,1") != std::string::npos, "B(0,0) = 1 present");

        std::string acsv = cli_stdout("constants --table A --n 2 --max-degree 4", tmp);
        test.expect_true(acsv.find("2,0,2/1,2") != std::string::npos, "A(2,0) = 2 present");

        std::string ccsv = cli_stdout("constants --table c --n 2 --max-degree 3", tmp);
        test.expect_true(ccsv.find("1,0,1,-1/2,-0.5") != std::string::npos,
                         "c for (k=1, slice j=1) = -1/2 present");

        test.expect_true(run_cli("constants --table Q --n 2") == 2,
                         "invalid table exits with 2");
        std::string js = cli_stdout("constants --table d --n 2 --max-degree 2 --format json", tmp);
        test.expect_true(js.find("\"table\": \"d\"") != std::string::npos, "JSON format emitted");

        std::string mu = cli_stdout("constants --table mu --n 2 --max-degree 3", tmp);
        test.expect_true(mu.find("1,0,2/1,2") != std::string::npos,
                         "mu table includes mu^1_0 = (n+2k)/(n+2k-1) = 2 for n=2");

        fs::path table_file = tmp / "table.csv";
        test.expect_true(run_cli("constants --table B --n 2 --max-degree 3 --out " +
                                 table_file.string()) == 0 &&
                             slurp(table_file).find("alpha,k") == 0,
                         "--out writes the table to a file");
    }

    // --- apply subcommand
    {
        fs::path in = tmp / "in.json", out = tmp / "out.json";
        write_series_file(in.string(), p1_slice_file(0, 1));  // kernel term (0,1)
        test.expect_true(run_cli("apply --transform dual-radon --in " + in.string() + " --out " +
                                 out.string()) == 0,
                         "dual-radon apply exits 0");
        SeriesFileData res = read_series_file(out.string());
        test.expect_true(res.kind == "taylor" && res.terms.empty(),
                         "kernel term maps to the empty Taylor series");

        SeriesFileData unit;
        unit.n = 2;
        unit.kind = "slice";
        {
            SeriesFileTerm t;
            t.j = 0;
            t.k = 0;
            t.poly = ExactPoly::constant_scalar(2, Arity::Vector, ExactScalar::one());
            unit.terms.push_back(t);
        }
        write_series_file(in.string(), unit);
        test.expect_true(run_cli("apply --transform i2 --in " + in.string() + " --out " +
                                 out.string()) == 0,
                         "i2 apply exits 0");
        res = read_series_file(out.string());
        test.expect_true(res.terms.size() == 1 && res.terms[0].j == -1,
                         "i2 maps (0,0) to (-1,0)");

        // radon on the n=2 Laurent kernel
        SeriesFileData lau;
        lau.n = 2;
        lau.kind = "laurent";
        SeriesFileTerm lt;
        lt.j = 0;
        lt.k = 0;
        lt.poly = ExactPoly::constant_scalar(2, Arity::Vector, ExactScalar::one());
        lau.terms.push_back(lt);
        write_series_file(in.string(), lau);
        test.expect_true(run_cli("apply --transform radon --in " + in.string() + " --out " +
                                 out.string()) == 0,
                         "radon apply exits 0");
        res = read_series_file(out.string());
        test.expect_true(res.kind == "slice" && res.terms.size() == 1 && res.terms[0].j == -1 &&
                             res.terms[0].poly ==
                                 ExactPoly::constant_scalar(2, Arity::Vector, ExactScalar(2)),
                         "radon output is 2 (x0+wp)^{-1}");
        test.expect_no_throw([&] { to_slice_series(res); }, "radon output revalidates");

        // kind mismatch -> exit 2
        write_series_file(in.string(), unit);
        test.expect_true(run_cli("apply --transform radon --in " + in.string() + " --out " +
                                 out.string()) == 2,
                         "radon on a slice file exits 2");

        // invalid poly -> exit 3
        nlohmann::json doc = nlohmann::json::parse(slurp(in));
        doc["kind"] = "laurent";
        doc["terms"][0]["poly"]["1,0"]["0"] = "1/1";  // adds x1, breaking monogenicity
        {
            std::ofstream f(in);
            f << doc.dump(2) << "\n";
        }
        test.expect_true(run_cli("apply --transform radon --in " + in.string() + " --out " +
                                 out.string()) == 3,
                         "validation failure exits 3");

        // in1 flips taylor <-> laurent with identical coefficients
        SeriesFileData tay;
        tay.n = 2;
        tay.kind = "taylor";
        {
            SeriesFileTerm t;
            t.j = 2;
            t.k = 0;
            t.poly = ExactPoly::constant_scalar(2, Arity::Vector, ExactScalar(3));
            tay.terms.push_back(t);
        }
        write_series_file(in.string(), tay);
        test.expect_true(run_cli("apply --transform in1 --in " + in.string() + " --out " +
                                 out.string()) == 0,
                         "in1 apply exits 0");
        res = read_series_file(out.string());
        test.expect_true(res.kind == "laurent" && res.terms.size() == 1 && res.terms[0].j == 2 &&
                             res.terms[0].poly == tay.terms[0].poly,
                         "in1 output keeps coefficients, flips the part");

        // fischer canonicalization of initial data: x1 as a (0,1) term
        SeriesFileData datum;
        datum.n = 2;
        datum.kind = "taylor";
        SeriesFileTerm dt;
        dt.j = 0;
        dt.k = 1;
        dt.poly = ExactPoly(2, Arity::Vector);
        dt.poly.add_term({1, 0}, Multivector<ExactScalar>::scalar(2, ExactScalar::one()));
        datum.terms.push_back(dt);
        write_series_file(in.string(), datum);
        test.expect_true(run_cli("apply --transform fischer --in " + in.string() + " --out " +
                                 out.string()) == 0,
                         "fischer apply exits 0");
        res = read_series_file(out.string());
        test.expect_true(res.terms.size() == 2, "fischer of x1 yields two components");
        test.expect_no_throw([&] { to_monogenic_series(res); }, "fischer output revalidates");
    }

    // --- verify subcommand
    {
        fs::path rep = tmp / "report.json";
        test.expect_true(run_cli("verify --suite constants --n 3 --max-degree 5 --report " +
                                 rep.string()) == 0,
                         "constants suite passes with exit 0");
        nlohmann::json doc = nlohmann::json::parse(slurp(rep));
        test.expect_true(doc["all_pass"].get<bool>(), "report records all_pass");
        test.expect_true(doc["checks"].size() > 0 && doc["checks"][0].contains("wall_ms"),
                         "per-check wall time recorded");
        test.expect_true(run_cli("verify --suite nosuch") == 2, "unknown suite exits 2");
    }

    test.summary();
    return test.all_passed() ? 0 : 1;
}
