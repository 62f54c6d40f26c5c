#include "tetra/json_io.hpp"

#include <fstream>
#include <map>

namespace tetra {

namespace {

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat(j.get<long>());
    throw InputError("expected a rational as \"p/q\" string or integer");
}

long index_of(const std::vector<std::string>& names, const std::string& s, const std::string& what) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return long(i);
    throw InputError("unknown " + what + ": " + s);
}

std::vector<std::string> name_list(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InputError("missing table: " + key);
    std::vector<std::string> out;
    for (const Json& x : j.at(key)) out.push_back(x.get<std::string>());
    return out;
}

}  // namespace

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

Mat mat_from_json(const Json& j, long expect_rows, long expect_cols) {
    long rows, cols;
    const Json* entries;
    if (j.is_array()) {
        // bare row-major array of arrays
        rows = long(j.size());
        cols = rows == 0 ? 0 : long(j.at(0).size());
        entries = &j;
    } else {
        rows = j.at("rows").get<long>();
        cols = j.at("cols").get<long>();
        entries = &j.at("entries");
    }
    if (expect_rows >= 0 && rows != expect_rows) throw InputError("matrix row count mismatch");
    if (expect_cols >= 0 && cols != expect_cols) throw InputError("matrix column count mismatch");
    if (long(entries->size()) != rows) throw InputError("matrix row count mismatch");
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = entries->at(i);
        if (long(row.size()) != cols) throw InputError("matrix column count mismatch");
        for (long c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(c));
    }
    return m;
}

Json vec_to_json(const Mat& v) {
    Json out = Json::array();
    for (long i = 0; i < v.rows(); ++i) out.push_back(rat_to_string(v.at(i, 0)));
    return out;
}

Mat vec_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected a vector as a JSON array");
    Mat v(long(j.size()), 1);
    for (size_t i = 0; i < j.size(); ++i) v.at(long(i), 0) = rat_from_json(j.at(i));
    return v;
}

Json space_to_json(const TwoVec& v) {
    Json out;
    out["dim_obj"] = v.dim_obj;
    out["dim_arr"] = v.dim_arr;
    out["d"] = mat_to_json(v.d)["entries"];
    return out;
}

TwoVec space_from_json(const Json& j) {
    long u = j.at("dim_obj").get<long>();
    long w = j.at("dim_arr").get<long>();
    if (u == 0 || w == 0) return TwoVec(u, w, Mat(u, w));
    return TwoVec(u, w, mat_from_json(j.at("d"), u, w));
}

Json leibniz2_to_json(const Leibniz2Algebra& l, const Mat* central) {
    Json out;
    out["kind"] = "leibniz2";
    out["space"] = space_to_json(l.space);
    out["m_uu"] = mat_to_json(l.bracket.m_uu)["entries"];
    out["m_wu"] = mat_to_json(l.bracket.m_wu)["entries"];
    out["m_uw"] = mat_to_json(l.bracket.m_uw)["entries"];
    out["l3"] = mat_to_json(l.l3)["entries"];
    if (central) out["central"] = vec_to_json(*central);
    return out;
}

Leibniz2Algebra leibniz2_from_json(const Json& j) {
    TwoVec v = space_from_json(j.at("space"));
    long u = v.dim_obj, w = v.dim_arr;
    BilinearOp op = make_bilinear(v, mat_from_json(j.at("m_uu"), u, u * u), mat_from_json(j.at("m_wu"), w, w * u),
                                  mat_from_json(j.at("m_uw"), w, u * w));
    return make_leibniz2(v, std::move(op), mat_from_json(j.at("l3"), w, u * u * u));
}

bool leibniz2_json_central(const Json& j, Mat* out) {
    if (!j.contains("central")) return false;
    *out = vec_from_json(j.at("central"));
    return true;
}

Json rack2_to_json(const Linear2Rack& rk) {
    Json out;
    out["kind"] = "rack2";
    out["space"] = space_to_json(rk.space);
    out["delta0"] = mat_to_json(rk.delta.d0)["entries"];
    out["deltaw"] = mat_to_json(rk.delta.dw)["entries"];
    out["eps"] = mat_to_json(rk.eps)["entries"];
    for (const char* key : {"lhd", "lhd_inv"}) {
        const BilinearOp& op = key == std::string("lhd") ? rk.lhd : rk.lhd_inv;
        Json b;
        b["m_uu"] = mat_to_json(op.m_uu)["entries"];
        b["m_wu"] = mat_to_json(op.m_wu)["entries"];
        b["m_uw"] = mat_to_json(op.m_uw)["entries"];
        out[key] = std::move(b);
    }
    out["r"] = mat_to_json(rk.r)["entries"];
    return out;
}

Linear2Rack rack2_from_json(const Json& j) {
    TwoVec v = space_from_json(j.at("space"));
    long u = v.dim_obj, w = v.dim_arr;
    auto bilinear = [&](const Json& b) {
        return make_bilinear(v, mat_from_json(b.at("m_uu"), u, u * u), mat_from_json(b.at("m_wu"), w, w * u),
                             mat_from_json(b.at("m_uw"), w, u * w));
    };
    Coproduct delta{mat_from_json(j.at("delta0"), u * u, u), mat_from_json(j.at("deltaw"), w * u + u * w, w)};
    return make_linear_2rack(v, std::move(delta), mat_from_json(j.at("eps"), 1, u), bilinear(j.at("lhd")),
                             bilinear(j.at("lhd_inv")), mat_from_json(j.at("r"), w, u * u * u));
}

std::vector<Mat> rack2_json_candidates(const Json& j, long dim_obj) {
    std::vector<Mat> out;
    if (!j.contains("group_like_candidates")) return out;
    for (const Json& c : j.at("group_like_candidates")) {
        Mat v = vec_from_json(c);
        if (v.rows() != dim_obj) throw InputError("candidate dimension mismatch");
        out.push_back(std::move(v));
    }
    return out;
}

Json solution_to_json(const ZteSolution& sol) {
    Json out;
    out["kind"] = "zte_solution";
    out["space"] = space_to_json(sol.space);
    Json b;
    b["strands"] = 2;
    b["f0"] = mat_to_json(sol.b.f0)["entries"];
    b["fw"] = mat_to_json(sol.b.fw)["entries"];
    out["B"] = std::move(b);
    Json binv;
    binv["strands"] = 2;
    binv["f0"] = mat_to_json(sol.b_inv.f0)["entries"];
    binv["fw"] = mat_to_json(sol.b_inv.fw)["entries"];
    out["Binv"] = std::move(binv);
    out["y"] = mat_to_json(sol.y)["entries"];
    return out;
}

ZteSolution solution_from_json(const Json& j) {
    TwoVec v = space_from_json(j.at("space"));
    TensorCtx two = tensor_power(v, 2);
    TensorCtx three = tensor_power(v, 3);
    auto cm = [&](const Json& b) {
        return make_chain_map(two, two, mat_from_json(b.at("f0"), two.obj_dim, two.obj_dim),
                              mat_from_json(b.at("fw"), two.arr_dim, two.arr_dim));
    };
    ZteSolution sol{v, cm(j.at("B")), cm(j.at("Binv")), mat_from_json(j.at("y"), three.arr_dim, three.obj_dim)};
    return sol;
}

Json report_to_json(const Report& rep) {
    Json out;
    out["version"] = "1";
    out["pass"] = rep.pass();
    Json flags;
    for (const auto& [name, ok] : rep.flags) flags[name] = ok;
    out["flags"] = std::move(flags);
    Json violations = Json::array();
    for (const Violation& v : rep.violations) {
        Json entry;
        entry["flag"] = v.flag;
        entry["basis"] = v.basis;
        entry["detail"] = v.detail;
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    out["elapsed_ms"] = rep.elapsed_ms;
    return out;
}

Json fincat_to_json(const FinCat& c, const std::vector<std::string>& obj_names,
                    const std::vector<std::string>& mor_names) {
    Json out;
    out["objects"] = obj_names;
    out["morphisms"] = mor_names;
    Json src, tgt, id;
    for (long m = 0; m < c.n_mor; ++m) {
        src[mor_names[m]] = obj_names[c.src[m]];
        tgt[mor_names[m]] = obj_names[c.tgt[m]];
    }
    for (long o = 0; o < c.n_obj; ++o) id[obj_names[o]] = mor_names[c.id[o]];
    out["src"] = std::move(src);
    out["tgt"] = std::move(tgt);
    out["id"] = std::move(id);
    Json comp = Json::array();
    for (long g = 0; g < c.n_mor; ++g)
        for (long f = 0; f < c.n_mor; ++f)
            if (c.comp[g][f] >= 0) comp.push_back(Json::array({mor_names[g], mor_names[f], mor_names[c.comp[g][f]]}));
    out["comp"] = std::move(comp);
    return out;
}

namespace {

FinCat fincat_from_json(const Json& j, std::vector<std::string>& obj_names, std::vector<std::string>& mor_names) {
    obj_names = name_list(j, "objects");
    mor_names = name_list(j, "morphisms");
    FinCat c;
    c.n_obj = long(obj_names.size());
    c.n_mor = long(mor_names.size());
    c.src.assign(c.n_mor, -1);
    c.tgt.assign(c.n_mor, -1);
    c.id.assign(c.n_obj, -1);
    for (long m = 0; m < c.n_mor; ++m) {
        c.src[m] = index_of(obj_names, j.at("src").at(mor_names[m]).get<std::string>(), "object");
        c.tgt[m] = index_of(obj_names, j.at("tgt").at(mor_names[m]).get<std::string>(), "object");
    }
    for (long o = 0; o < c.n_obj; ++o)
        c.id[o] = index_of(mor_names, j.at("id").at(obj_names[o]).get<std::string>(), "morphism");
    c.comp.assign(c.n_mor, std::vector<long>(c.n_mor, -1));
    for (const Json& triple : j.at("comp")) {
        long g = index_of(mor_names, triple.at(0).get<std::string>(), "morphism");
        long f = index_of(mor_names, triple.at(1).get<std::string>(), "morphism");
        c.comp[g][f] = index_of(mor_names, triple.at(2).get<std::string>(), "morphism");
    }
    return c;
}

FinBifunctor bifunctor_from_json(const Json& j, const std::vector<std::string>& obj_names,
                                 const std::vector<std::string>& mor_names) {
    FinBifunctor op;
    op.obj.assign(obj_names.size(), std::vector<long>(obj_names.size(), -1));
    op.mor.assign(mor_names.size(), std::vector<long>(mor_names.size(), -1));
    for (const Json& triple : j.at("obj")) {
        long a = index_of(obj_names, triple.at(0).get<std::string>(), "object");
        long b = index_of(obj_names, triple.at(1).get<std::string>(), "object");
        op.obj[a][b] = index_of(obj_names, triple.at(2).get<std::string>(), "object");
    }
    for (const Json& triple : j.at("mor")) {
        long f = index_of(mor_names, triple.at(0).get<std::string>(), "morphism");
        long g = index_of(mor_names, triple.at(1).get<std::string>(), "morphism");
        op.mor[f][g] = index_of(mor_names, triple.at(2).get<std::string>(), "morphism");
    }
    return op;
}

FinGroup group_from_json(const Json& j, std::vector<std::string>& names) {
    names = name_list(j, "elements");
    FinGroup g;
    g.n = long(names.size());
    g.unit = index_of(names, j.at("unit").get<std::string>(), "element");
    g.mul.assign(g.n, std::vector<long>(g.n, -1));
    for (const Json& triple : j.at("mul")) {
        long a = index_of(names, triple.at(0).get<std::string>(), "element");
        long b = index_of(names, triple.at(1).get<std::string>(), "element");
        g.mul[a][b] = index_of(names, triple.at(2).get<std::string>(), "element");
    }
    g.inv.assign(g.n, -1);
    for (long a = 0; a < g.n; ++a)
        for (long b = 0; b < g.n; ++b)
            if (g.mul[a][b] == g.unit) g.inv[a] = b;
    for (long a = 0; a < g.n; ++a)
        for (long b = 0; b < g.n; ++b)
            if (g.mul[a][b] < 0) throw InputError("incomplete multiplication table");
    return g;
}

}  // namespace

NamedFinRack finrack_from_json(const Json& j) {
    NamedFinRack out;
    std::vector<std::string> obj_names, mor_names;
    out.cat = fincat_from_json(j.at("category"), obj_names, mor_names);
    out.lhd = bifunctor_from_json(j.at("lhd"), obj_names, mor_names);
    if (j.contains("lhd_inv")) {
        out.has_inverse = true;
        out.lhd_inv = bifunctor_from_json(j.at("lhd_inv"), obj_names, mor_names);
    }
    if (j.contains("r")) {
        out.has_distributor = true;
        long n = out.cat.n_obj;
        out.r.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, -1)));
        for (const Json& quad : j.at("r")) {
            long a = index_of(obj_names, quad.at(0).get<std::string>(), "object");
            long b = index_of(obj_names, quad.at(1).get<std::string>(), "object");
            long c = index_of(obj_names, quad.at(2).get<std::string>(), "object");
            out.r[a][b][c] = index_of(mor_names, quad.at(3).get<std::string>(), "morphism");
        }
    }
    return out;
}

CrossedModule crossed_module_from_json(const Json& j) {
    CrossedModule cm;
    std::vector<std::string> gnames, hnames;
    cm.g = group_from_json(j.at("g"), gnames);
    cm.h = group_from_json(j.at("h"), hnames);
    cm.boundary.assign(cm.h.n, -1);
    for (long h = 0; h < cm.h.n; ++h)
        cm.boundary[h] = index_of(gnames, j.at("boundary").at(hnames[h]).get<std::string>(), "element");
    cm.action.assign(cm.g.n, std::vector<long>(cm.h.n, -1));
    for (const Json& triple : j.at("action")) {
        long g = index_of(gnames, triple.at(0).get<std::string>(), "element");
        long h = index_of(hnames, triple.at(1).get<std::string>(), "element");
        cm.action[g][h] = index_of(hnames, triple.at(2).get<std::string>(), "element");
    }
    for (long g = 0; g < cm.g.n; ++g)
        for (long h = 0; h < cm.h.n; ++h)
            if (cm.action[g][h] < 0) throw InputError("incomplete action table");
    return cm;
}

Json conjugation_rack_to_json(const ConjugationRack& rack) {
    std::vector<std::string> obj_names, mor_names;
    for (long o = 0; o < rack.cat.n_obj; ++o) obj_names.push_back("x" + std::to_string(o));
    for (long m = 0; m < rack.cat.n_mor; ++m) mor_names.push_back("f" + std::to_string(m));
    Json out;
    out["kind"] = "finrack";
    out["category"] = fincat_to_json(rack.cat, obj_names, mor_names);
    Json obj = Json::array(), mor = Json::array();
    for (long a = 0; a < rack.cat.n_obj; ++a)
        for (long b = 0; b < rack.cat.n_obj; ++b)
            obj.push_back(Json::array({obj_names[a], obj_names[b], obj_names[rack.lhd.obj[a][b]]}));
    for (long f = 0; f < rack.cat.n_mor; ++f)
        for (long g = 0; g < rack.cat.n_mor; ++g)
            mor.push_back(Json::array({mor_names[f], mor_names[g], mor_names[rack.lhd.mor[f][g]]}));
    Json lhd;
    lhd["obj"] = std::move(obj);
    lhd["mor"] = std::move(mor);
    out["lhd"] = std::move(lhd);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tetra
