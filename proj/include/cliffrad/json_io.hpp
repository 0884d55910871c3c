#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffrad/series.hpp"

namespace cliffrad {

// Raised when a series file parses but fails semantic validation
// (homogeneity / monogenicity of the term polynomials).
class SeriesValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
// Raised on malformed documents or kind mismatches.
class SeriesFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SeriesFileTerm {
    int j = 0;
    int k = 0;
    ExactPoly poly;
    SeriesFileTerm() : poly(1, Arity::Vector) {}
};

// In-memory form of the on-disk series document
//   { "n": int, "kind": "slice"|"taylor"|"laurent",
//     "terms": [ { "j":., "k":., "poly": { "<e1,..,en>": { "<blade>": "p/q" } } } ] }
// Coefficient strings are exact rationals, optionally "*pi^(h/2)" scaled.
struct SeriesFileData {
    int n = 2;
    std::string kind;  // "slice" | "taylor" | "laurent"
    std::vector<SeriesFileTerm> terms;
};

namespace detail {

inline std::string key_to_string(const std::vector<int>& exps) {
    std::ostringstream os;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) os << ",";
        os << exps[i];
    }
    return os.str();
}

inline std::vector<int> key_from_string(const std::string& s, int expected) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    if (static_cast<int>(out.size()) != expected)
        throw SeriesFormatError("monomial key '" + s + "' has wrong arity");
    return out;
}

}  // namespace detail

inline nlohmann::json poly_to_json(const ExactPoly& p) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, coeff] : p.terms()) {
        nlohmann::json blades = nlohmann::json::object();
        for (const auto& [mask, v] : coeff.coeffs()) blades[std::to_string(mask)] = v.to_string();
        obj[detail::key_to_string(key)] = std::move(blades);
    }
    return obj;
}

inline ExactPoly poly_from_json(const nlohmann::json& obj, int n) {
    ExactPoly p(n, Arity::Vector);
    if (!obj.is_object()) throw SeriesFormatError("poly must be an object");
    for (const auto& [key, blades] : obj.items()) {
        auto exps = detail::key_from_string(key, n);
        Multivector<ExactScalar> coeff(n);
        if (!blades.is_object()) throw SeriesFormatError("blade map must be an object");
        for (const auto& [mask_str, value] : blades.items()) {
            unsigned long mask = std::stoul(mask_str);
            if (mask >= (1ul << n)) throw SeriesFormatError("blade mask out of range: " + mask_str);
            coeff.set(static_cast<unsigned>(mask),
                      ExactScalar::parse(value.get<std::string>()));
        }
        p.add_term(exps, coeff);
    }
    return p;
}

inline nlohmann::json series_file_to_json(const SeriesFileData& data) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : data.terms) {
        nlohmann::json jt;
        jt["j"] = t.j;
        jt["k"] = t.k;
        jt["poly"] = poly_to_json(t.poly);
        terms.push_back(std::move(jt));
    }
    nlohmann::json doc;
    doc["n"] = data.n;
    doc["kind"] = data.kind;
    doc["terms"] = std::move(terms);
    return doc;
}

inline SeriesFileData series_file_from_json(const nlohmann::json& doc) {
    SeriesFileData data;
    try {
        data.n = doc.at("n").get<int>();
        data.kind = doc.at("kind").get<std::string>();
        if (data.kind != "slice" && data.kind != "taylor" && data.kind != "laurent")
            throw SeriesFormatError("unknown series kind '" + data.kind + "'");
        if (data.n < 2 || data.n > kMaxDim) throw SeriesFormatError("dimension out of range");
        for (const auto& jt : doc.at("terms")) {
            SeriesFileTerm t;
            t.j = jt.at("j").get<int>();
            t.k = jt.at("k").get<int>();
            t.poly = poly_from_json(jt.at("poly"), data.n);
            data.terms.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception& e) {
        throw SeriesFormatError(std::string("malformed series document: ") + e.what());
    }
    return data;
}

// Canonical serialization: terms ordered by (j,k), object keys sorted (the
// default nlohmann object is map-backed), two-space indent, trailing newline.
inline std::string series_file_to_string(SeriesFileData data) {
    std::stable_sort(data.terms.begin(), data.terms.end(),
                     [](const SeriesFileTerm& a, const SeriesFileTerm& b) {
                         return std::make_pair(a.j, a.k) < std::make_pair(b.j, b.k);
                     });
    return series_file_to_json(data).dump(2) + "\n";
}

inline SeriesFileData read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SeriesFormatError("cannot open series file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SeriesFormatError(std::string("JSON parse error: ") + e.what());
    }
    return series_file_from_json(doc);
}

inline void write_series_file(const std::string& path, const SeriesFileData& data) {
    std::ofstream out(path);
    if (!out) throw SeriesFormatError("cannot open output file: " + path);
    out << series_file_to_string(data);
}

// Full validation into the typed series; every poly must be k-homogeneous
// and Dirac-annihilated.
inline SliceSeries to_slice_series(const SeriesFileData& data) {
    if (data.kind != "slice") throw SeriesFormatError("expected kind 'slice', got '" + data.kind + "'");
    SliceSeries s(data.n);
    for (const auto& t : data.terms) {
        try {
            s.add_term(t.j, t.k, t.poly);
        } catch (const std::invalid_argument& e) {
            throw SeriesValidationError(e.what());
        }
    }
    return s;
}

inline MonogenicSeries to_monogenic_series(const SeriesFileData& data) {
    if (data.kind != "taylor" && data.kind != "laurent")
        throw SeriesFormatError("expected kind 'taylor' or 'laurent', got '" + data.kind + "'");
    MonogenicSeries s(data.n,
                      data.kind == "taylor" ? SeriesPart::Taylor : SeriesPart::Laurent);
    for (const auto& t : data.terms) {
        try {
            s.add_term(t.j, t.k, t.poly);
        } catch (const std::invalid_argument& e) {
            throw SeriesValidationError(e.what());
        }
    }
    return s;
}

inline SeriesFileData from_slice_series(const SliceSeries& s) {
    SeriesFileData data;
    data.n = s.n;
    data.kind = "slice";
    for (const auto& [key, poly] : s.terms) {
        SeriesFileTerm t;
        t.j = key.first;
        t.k = key.second;
        t.poly = poly;
        data.terms.push_back(std::move(t));
    }
    return data;
}

inline SeriesFileData from_monogenic_series(const MonogenicSeries& s) {
    SeriesFileData data;
    data.n = s.n;
    data.kind = s.part == SeriesPart::Taylor ? "taylor" : "laurent";
    for (const auto& [key, poly] : s.terms) {
        SeriesFileTerm t;
        t.j = key.first;
        t.k = key.second;
        t.poly = poly;
        data.terms.push_back(std::move(t));
    }
    return data;
}

}  // namespace cliffrad
