#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "helly/collapse.hpp"
#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/geometry.hpp"
#include "helly/matroid.hpp"
#include "helly/rational.hpp"
#include "helly/simplex.hpp"
#include "helly/tverberg.hpp"

namespace helly {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(Errc::IoError, "rational must be an integer or a \"p/q\" string");
}

inline json rational_to_json(const Rational& r) { return json(rational_str(r)); }

inline Point point_from_json(const json& j) {
    require(j.is_array(), Errc::IoError, "point must be an array");
    std::vector<Rational> c;
    for (const json& x : j) c.push_back(rational_from_json(x));
    return Point(std::move(c));
}

inline json point_to_json(const Point& p) {
    json a = json::array();
    for (const Rational& x : p.coords) a.push_back(rational_to_json(x));
    return a;
}

inline json simplex_to_json(const Simplex& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

inline Simplex simplex_from_json(const json& j) {
    require(j.is_array(), Errc::IoError, "simplex must be an array of vertex ids");
    std::vector<int> v;
    for (const json& x : j) {
        require(x.is_number_integer(), Errc::IoError, "vertex ids must be integers");
        v.push_back(x.get<int>());
    }
    return Simplex(std::move(v));
}

// ---------------------------------------------------------------------------
// Complexes: {"vertices": n, "facets": [[0,1,2],[2,3]], "labels": [...]?}
// ---------------------------------------------------------------------------

inline json complex_to_json(const SimplicialComplex& X,
                            const std::vector<std::string>* labels = nullptr) {
    json j;
    int n = X.num_vertices();
    if (n > 0) n = std::max(n, X.vertex_set()[X.num_vertices() - 1] + 1);
    j["vertices"] = n;
    json fs = json::array();
    for (const Simplex& f : X.facets()) fs.push_back(simplex_to_json(f));
    j["facets"] = fs;
    if (labels) j["labels"] = *labels;
    return j;
}

/// Loader normalizes: facets are sorted, deduplicated, and reduced to the
/// maximal antichain. Inputs that were not already normal are accepted with a
/// warning appended to `warnings`.
inline SimplicialComplex complex_from_json(const json& j,
                                           std::vector<std::string>* warnings = nullptr) {
    require(j.contains("vertices") && j["vertices"].is_number_integer(), Errc::IoError,
            "complex needs an integer \"vertices\" field");
    const int n = j["vertices"].get<int>();
    require(n >= 0, Errc::IoError, "negative vertex count");
    require(j.contains("facets") && j["facets"].is_array(), Errc::IoError,
            "complex needs a \"facets\" array");
    std::vector<Simplex> fs;
    for (const json& f : j["facets"]) {
        Simplex s = simplex_from_json(f);
        if (static_cast<size_t>(s.size()) != f.size() && warnings)
            warnings->push_back("facet " + f.dump() + " had repeated vertices; deduplicated");
        fs.push_back(std::move(s));
    }
    for (const Simplex& s : fs)
        require(s.is_empty() || s[s.size() - 1] < n, Errc::InvalidVertex,
                "facet " + s.str() + " outside 0.." + std::to_string(n - 1));
    SimplicialComplex X = SimplicialComplex::from_facets(n, fs);
    if (warnings && X.facets().size() != fs.size()) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        if (X.facets().size() != fs.size())
            warnings->push_back("facet list was not an antichain; dominated faces dropped");
        else
            warnings->push_back("facet list had duplicates; deduplicated");
    }
    return X;
}

// ---------------------------------------------------------------------------
// Matroids, keyed by "kind".
// ---------------------------------------------------------------------------

inline json matroid_to_json(const Matroid& m) {
    json j;
    switch (m.kind()) {
        case Matroid::Kind::Uniform:
            j["kind"] = "uniform";
            j["n"] = m.num_elements();
            j["r"] = m.uniform_rank();
            break;
        case Matroid::Kind::Partition: {
            j["kind"] = "partition";
            json blocks = json::array();
            for (const auto& b : m.blocks()) blocks.push_back(b);
            j["blocks"] = blocks;
            break;
        }
        case Matroid::Kind::Linear: {
            j["kind"] = "linear";
            json rows = json::array();
            for (const auto& v : m.vectors()) {
                json row = json::array();
                for (const Rational& x : v) row.push_back(rational_to_json(x));
                rows.push_back(row);
            }
            j["matrix"] = rows;
            break;
        }
        case Matroid::Kind::Explicit: {
            j["kind"] = "explicit";
            j["n"] = m.num_elements();
            json fam = json::array();
            for (const Simplex& s : m.family()) fam.push_back(simplex_to_json(s));
            j["independent"] = fam;
            break;
        }
        case Matroid::Kind::Tolerance:
            j["kind"] = "tolerance";
            j["base"] = matroid_to_json(m.tolerance_base());
            j["t"] = m.tolerance_t();
            break;
    }
    return j;
}

inline Matroid matroid_from_json(const json& j) {
    require(j.contains("kind") && j["kind"].is_string(), Errc::IoError,
            "matroid needs a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "uniform") return Matroid::uniform(j.at("n").get<int>(), j.at("r").get<int>());
    if (kind == "partition") {
        std::vector<std::vector<int>> blocks;
        int n = 0;
        for (const json& b : j.at("blocks")) {
            std::vector<int> blk;
            for (const json& e : b) {
                blk.push_back(e.get<int>());
                n = std::max(n, blk.back() + 1);
            }
            blocks.push_back(std::move(blk));
        }
        return Matroid::partition(n, std::move(blocks));
    }
    if (kind == "linear") {
        std::vector<std::vector<Rational>> vectors;
        for (const json& row : j.at("matrix")) {
            std::vector<Rational> v;
            for (const json& x : row) v.push_back(rational_from_json(x));
            vectors.push_back(std::move(v));
        }
        return Matroid::linear(std::move(vectors));
    }
    if (kind == "explicit") {
        std::vector<Simplex> fam;
        for (const json& s : j.at("independent")) fam.push_back(simplex_from_json(s));
        return Matroid::explicit_family(j.at("n").get<int>(), std::move(fam));
    }
    if (kind == "tolerance")
        return matroid_from_json(j.at("base")).tolerance(j.at("t").get<int>());
    fail(Errc::IoError, "unknown matroid kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Point configurations and colored families.
// ---------------------------------------------------------------------------

inline json points_to_json(const PointConfig& A) {
    json j;
    j["dim"] = A.dim;
    json pts = json::array();
    for (const Point& p : A.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
    return j;
}

inline PointConfig points_from_json(const json& j) {
    PointConfig A;
    A.dim = j.at("dim").get<int>();
    for (const json& p : j.at("points")) A.points.push_back(point_from_json(p));
    A.validate();
    return A;
}

inline json body_to_json(const ConvexBody& b) {
    json j;
    switch (b.kind) {
        case ConvexBody::Kind::Hull: {
            json pts = json::array();
            for (const Point& p : b.points) pts.push_back(point_to_json(p));
            j["hull"] = pts;
            break;
        }
        case ConvexBody::Kind::OpenHalfspace:
            j["halfspace_open"] = json{{"normal", point_to_json(b.normal)}};
            break;
        case ConvexBody::Kind::ClosedHalfspace:
            j["halfspace_closed"] = json{{"normal", point_to_json(b.normal)},
                                         {"offset", rational_to_json(b.offset)}};
            break;
        case ConvexBody::Kind::AxisBox: {
            json lo = json::array(), hi = json::array();
            for (const Rational& x : b.lo) lo.push_back(rational_to_json(x));
            for (const Rational& x : b.hi) hi.push_back(rational_to_json(x));
            j["box"] = json{{"lo", lo}, {"hi", hi}};
            break;
        }
    }
    return j;
}

inline ConvexBody body_from_json(const json& j) {
    if (j.contains("hull")) {
        std::vector<Point> pts;
        for (const json& p : j["hull"]) pts.push_back(point_from_json(p));
        return ConvexBody::hull(std::move(pts));
    }
    if (j.contains("halfspace_open"))
        return ConvexBody::open_halfspace(point_from_json(j["halfspace_open"].at("normal")));
    if (j.contains("halfspace_closed"))
        return ConvexBody::closed_halfspace(
            point_from_json(j["halfspace_closed"].at("normal")),
            rational_from_json(j["halfspace_closed"].at("offset")));
    if (j.contains("box")) {
        std::vector<Rational> lo, hi;
        for (const json& x : j["box"].at("lo")) lo.push_back(rational_from_json(x));
        for (const json& x : j["box"].at("hi")) hi.push_back(rational_from_json(x));
        return ConvexBody::box(std::move(lo), std::move(hi));
    }
    fail(Errc::IoError, "body must be one of hull/halfspace_open/halfspace_closed/box");
}

inline json family_to_json(const ColoredFamily& f) {
    json j;
    j["dim"] = f.dim;
    json bodies = json::array();
    for (const ConvexBody& b : f.bodies) bodies.push_back(body_to_json(b));
    j["bodies"] = bodies;
    j["colors"] = f.colors;
    return j;
}

inline ColoredFamily family_from_json(const json& j) {
    ColoredFamily f;
    f.dim = j.at("dim").get<int>();
    for (const json& b : j.at("bodies")) f.bodies.push_back(body_from_json(b));
    if (j.contains("colors"))
        f.colors = j["colors"].get<std::vector<int>>();
    else
        f.colors.assign(f.bodies.size(), 0);
    f.validate();
    return f;
}

// ---------------------------------------------------------------------------
// Certificates. Emitted certificates embed their instance so that
// `helly verify` can re-check them standalone.
// ---------------------------------------------------------------------------

inline json collapse_cert_to_json(const SimplicialComplex& X, int d, CollapseMode mode,
                                  const CollapseSearchResult& res) {
    json j;
    j["helly_schema"] = kSchemaVersion;
    j["type"] = "collapse";
    j["complex"] = complex_to_json(X);
    j["d"] = d;
    j["mode"] = collapse_mode_name(mode);
    if (res.sequence) {
        j["collapsible"] = true;
        json steps = json::array();
        for (const CollapseStep& st : res.sequence->steps)
            steps.push_back(json{{"free", simplex_to_json(st.free_face)},
                                 {"max", simplex_to_json(st.max_face)}});
        j["steps"] = steps;
    } else {
        j["collapsible"] = false;
        j["exhaustive"] = res.exhaustive;
    }
    return j;
}

inline CollapseSequence collapse_sequence_from_json(const json& j) {
    CollapseSequence seq;
    seq.d = j.at("d").get<int>();
    const std::string mode = j.at("mode").get<std::string>();
    require(mode == "standard" || mode == "exact", Errc::IoError, "unknown collapse mode");
    seq.mode = mode == "standard" ? CollapseMode::Standard : CollapseMode::ExactD;
    for (const json& st : j.at("steps"))
        seq.steps.push_back(
            {simplex_from_json(st.at("free")), simplex_from_json(st.at("max"))});
    return seq;
}

inline json tverberg_cert_to_json(const PointConfig& A, int r, const TverbergCertificate& c) {
    json j;
    j["helly_schema"] = kSchemaVersion;
    j["type"] = "tverberg_center";
    j["points"] = points_to_json(A);
    j["r"] = r;
    j["labels"] = c.labels;
    j["center"] = c.center;
    json wit = json::object();
    for (const auto& [p, pt] : c.witnesses) wit[std::to_string(p)] = point_to_json(pt);
    j["witnesses"] = wit;
    j["verified"] = json{{"center", true}};
    return j;
}

inline json tolerance_cert_to_json(const PointConfig& A, int r, const ToleranceCertificate& c) {
    json j;
    j["helly_schema"] = kSchemaVersion;
    j["type"] = "tverberg_tolerant";
    j["points"] = points_to_json(A);
    j["r"] = r;
    j["t"] = c.t;
    j["labels"] = c.labels;
    j["verified"] =
        json{{"tolerance_up_to", c.verified_up_to}, {"level_overlaps", c.level_overlaps}};
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::IoError, "cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), Errc::IoError, "cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace helly
