#include "exobasis/io.hpp"

#include <cstdio>
#include <ostream>

#include "exobasis/errors.hpp"

namespace exobasis {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::vector<std::int64_t> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::vector<Rat> rat_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of \"p/q\" strings");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_string()) throw InputError(std::string(what) + " entries must be \"p/q\" strings");
        out.push_back(rat_parse(e.get<std::string>()));
    }
    return out;
}

void check_schema(const Json& j) {
    auto it = j.find("schema");
    if (it != j.end() && *it != kSchemaTag)
        throw InputError("unsupported schema tag " + it->dump() + ", expected \"" +
                         kSchemaTag + "\"");
}

} // namespace

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // nlohmann reports "... at line L, column C: ..." in what()
        throw InputError(e.what());
    }
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json num12(double x) { return Json(std::stod(fmt12(x))); }

Json lattice_to_json(const Lattice& L) {
    Json basis = Json::array();
    for (int i = 0; i < L.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < L.dim(); ++j) row.push_back(rat_str(L.basis().at(i, j)));
        basis.push_back(std::move(row));
    }
    return Json{{"dim", L.dim()}, {"basis", std::move(basis)}};
}

Lattice lattice_from_json(const Json& j) {
    const int d = field(j, "dim").get<int>();
    if (d < 1) throw InputError("lattice dimension must be positive");
    const Json& rows = field(j, "basis");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw InputError("basis must be a dim x dim array");
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> row = rat_vector(rows[i], "basis row");
        if (static_cast<int>(row.size()) != d) throw InputError("basis must be a dim x dim array");
        for (int c = 0; c < d; ++c) m.at(i, c) = row[c];
    }
    return make_lattice(m);
}

Json region_to_json(const UnitRegion& r) {
    Json boxes = Json::array();
    for (const Box& b : r.boxes()) {
        Json lo = Json::array(), hi = Json::array();
        for (const Rat& x : b.lo) lo.push_back(rat_str(x));
        for (const Rat& x : b.hi) hi.push_back(rat_str(x));
        boxes.push_back(Json{{"lo", std::move(lo)}, {"hi", std::move(hi)}});
    }
    return Json{{"boxes", std::move(boxes)}};
}

UnitRegion region_from_json(const Json& j) {
    const Json& boxes = field(j, "boxes");
    if (!boxes.is_array() || boxes.empty())
        throw InputError("region needs a nonempty box array");
    std::vector<Box> out;
    out.reserve(boxes.size());
    int dim = -1;
    for (const Json& b : boxes) {
        Box box(rat_vector(field(b, "lo"), "box lo"), rat_vector(field(b, "hi"), "box hi"));
        if (dim < 0) dim = box.dim();
        out.push_back(std::move(box));
    }
    return UnitRegion(dim, std::move(out));
}

Json multitile_to_json(const MultiTileSet& s) {
    Json pieces = Json::array();
    for (const Piece& p : s.pieces())
        pieces.push_back(Json{{"region", region_to_json(p.region)},
                              {"translate", Json(p.translate.z)}});
    return Json{{"schema", kSchemaTag},
                {"lattice", lattice_to_json(s.lattice())},
                {"pieces", std::move(pieces)}};
}

MultiTileSet multitile_from_json(const Json& j) {
    check_schema(j);
    Lattice L = lattice_from_json(field(j, "lattice"));
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) throw InputError("pieces must be an array");
    std::vector<Piece> out;
    out.reserve(pieces.size());
    for (const Json& p : pieces)
        out.push_back(Piece{region_from_json(field(p, "region")),
                            LatticePoint(int_vector(field(p, "translate"), "translate"))});
    return MultiTileSet(std::move(L), std::move(out));
}

Json certificate_to_json(const AdmissibilityCertificate& c) {
    return Json{{"n", c.n}, {"v", Json(c.v.w)}};
}

AdmissibilityCertificate certificate_from_json(const Json& j) {
    return AdmissibilityCertificate(field(j, "n").get<int>(),
                                    DualVector(int_vector(field(j, "v"), "v")));
}

Json partition_to_json(const FiberPartition& P) {
    Json classes = Json::array();
    for (const FiberClass& c : P.classes) {
        Json pts = Json::array();
        for (const LatticePoint& p : c.points) pts.push_back(Json(p.z));
        classes.push_back(Json{{"region", region_to_json(c.region)}, {"points", std::move(pts)}});
    }
    return Json{{"schema", kSchemaTag},
                {"lattice", lattice_to_json(P.lattice)},
                {"classes", std::move(classes)},
                {"uncovered", region_to_json(P.uncovered)}};
}

Json bounds_to_json(const BoundsReport& r) {
    Json classes = Json::array();
    for (const ClassBounds& c : r.classes) {
        Json pts = Json::array();
        for (const LatticePoint& p : c.points) pts.push_back(Json(p.z));
        classes.push_back(Json{{"R", std::move(pts)},
                               {"residues", Json(c.residues)},
                               {"eig_min", num12(c.eig_min)},
                               {"eig_max", num12(c.eig_max)}});
    }
    return Json{{"schema", kSchemaTag},
                {"A", num12(r.A)},
                {"B", num12(r.B)},
                {"A_L2", num12(r.A_L2)},
                {"B_L2", num12(r.B_L2)},
                {"kind", bounds_kind_name(r.kind)},
                {"classes", std::move(classes)}};
}

Json violation_to_json(const Violation& v) {
    return Json{{"region", region_to_json(v.class_region)},
                {"p1", Json(v.p1.z)},
                {"p2", Json(v.p2.z)},
                {"residue", v.residue}};
}

void bounds_to_csv(const BoundsReport& r, std::ostream& os) {
    os << "class,residues,eig_min,eig_max\n";
    for (size_t i = 0; i < r.classes.size(); ++i) {
        os << i << ",\"";
        for (size_t t = 0; t < r.classes[i].residues.size(); ++t)
            os << (t ? " " : "") << r.classes[i].residues[t];
        os << "\"," << fmt12(r.classes[i].eig_min) << "," << fmt12(r.classes[i].eig_max) << "\n";
    }
}

void quotients_to_csv(const std::vector<double>& quotients, std::ostream& os) {
    os << "trial,quotient\n";
    for (size_t i = 0; i < quotients.size(); ++i) os << i << "," << fmt12(quotients[i]) << "\n";
}

} // namespace exobasis
