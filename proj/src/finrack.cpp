#include "tetra/finrack.hpp"

namespace tetra {

namespace {

std::string tuple_str(std::initializer_list<long> xs) {
    std::string s = "(";
    bool first = true;
    for (long x : xs) {
        if (!first) s += ", ";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

Report check_fincat(const FinCat& x) {
    Report rep;
    rep.set("shapes", long(x.src.size()) == x.n_mor && long(x.tgt.size()) == x.n_mor &&
                          long(x.id.size()) == x.n_obj && long(x.comp.size()) == x.n_mor);
    if (!rep.pass()) return rep;
    bool ids = true, compat = true;
    for (long o = 0; o < x.n_obj; ++o)
        ids = ids && x.id[o] >= 0 && x.id[o] < x.n_mor && x.src[x.id[o]] == o && x.tgt[x.id[o]] == o;
    for (long f = 0; f < x.n_mor; ++f) {
        compat = compat && long(x.comp[f].size()) == x.n_mor;
        if (!compat) break;
        for (long g = 0; g < x.n_mor; ++g) {
            long gf = x.comp[g][f];
            if (x.tgt[f] != x.src[g]) {
                compat = compat && gf < 0;
                continue;
            }
            compat = compat && gf >= 0 && gf < x.n_mor && x.src[gf] == x.src[f] && x.tgt[gf] == x.tgt[g];
        }
    }
    rep.set("identities", ids);
    rep.set("composition", compat);
    if (!ids || !compat) {
        rep.set("unit_laws", false);
        rep.set("associativity", false);
        return rep;
    }
    bool unit = true, assoc = true;
    for (long f = 0; f < x.n_mor; ++f) {
        unit = unit && x.comp[f][x.id[x.src[f]]] == f && x.comp[x.id[x.tgt[f]]][f] == f;
        for (long g = 0; g < x.n_mor; ++g) {
            if (x.tgt[f] != x.src[g]) continue;
            for (long h = 0; h < x.n_mor; ++h) {
                if (x.tgt[g] != x.src[h]) continue;
                assoc = assoc && x.comp[h][x.comp[g][f]] == x.comp[x.comp[h][g]][f];
            }
        }
    }
    rep.set("unit_laws", unit);
    rep.set("associativity", assoc);
    return rep;
}

Report check_bifunctor(const FinCat& x, const FinBifunctor& op) {
    Report rep;
    rep.set("shapes", long(op.obj.size()) == x.n_obj && long(op.mor.size()) == x.n_mor);
    if (!rep.pass()) return rep;
    rep.set("src_tgt", true);
    rep.set("identities", true);
    rep.set("composition", true);
    for (long f = 0; f < x.n_mor; ++f)
        for (long g = 0; g < x.n_mor; ++g) {
            long fg = op.mor[f][g];
            if (x.src[fg] != op.obj[x.src[f]][x.src[g]] || x.tgt[fg] != op.obj[x.tgt[f]][x.tgt[g]]) {
                rep.set("src_tgt", false);
                rep.add_violation({"src_tgt", {f, g}, "image morphism has wrong endpoints"});
            }
        }
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            if (op.mor[x.id[a]][x.id[b]] != x.id[op.obj[a][b]]) {
                rep.set("identities", false);
                rep.add_violation({"identities", {a, b}, "identity pair not sent to an identity"});
            }
    for (long f = 0; f < x.n_mor; ++f)
        for (long f2 = 0; f2 < x.n_mor; ++f2) {
            if (x.tgt[f] != x.src[f2]) continue;
            for (long g = 0; g < x.n_mor; ++g)
                for (long g2 = 0; g2 < x.n_mor; ++g2) {
                    if (x.tgt[g] != x.src[g2]) continue;
                    long lhs = op.mor[x.comp[f2][f]][x.comp[g2][g]];
                    long rhs = x.comp[op.mor[f2][g2]][op.mor[f][g]];
                    if (lhs != rhs) {
                        rep.set("composition", false);
                        rep.add_violation({"composition", {f, f2, g, g2}, "interchange fails"});
                    }
                }
        }
    return rep;
}

RComponents identity_distributor(const FinCat& x, const FinBifunctor& lhd) {
    RComponents r(x.n_obj, std::vector<std::vector<long>>(x.n_obj, std::vector<long>(x.n_obj, -1)));
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            for (long c = 0; c < x.n_obj; ++c) r[a][b][c] = x.id[lhd.obj[lhd.obj[a][b]][c]];
    return r;
}

Report check_semistrict_2rack(const FinCat& x, const FinBifunctor& lhd, const RComponents& r,
                              const FinBifunctor& lhd_inv) {
    Report rep;
    rep.merge(check_fincat(x), "cat_");
    rep.merge(check_bifunctor(x, lhd), "op_");
    rep.merge(check_bifunctor(x, lhd_inv), "inv_");
    if (!rep.pass()) return rep;

    auto ob = [&](long a, long b) { return lhd.obj[a][b]; };
    rep.set("invertible", true);
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            if (lhd_inv.obj[ob(a, b)][b] != a || ob(lhd_inv.obj[a][b], b) != a) {
                rep.set("invertible", false);
                rep.add_violation({"invertible", {a, b}, "object inverse laws fail"});
            }
    for (long f = 0; f < x.n_mor; ++f)
        for (long b = 0; b < x.n_obj; ++b) {
            long ib = x.id[b];
            if (lhd_inv.mor[lhd.mor[f][ib]][ib] != f || lhd.mor[lhd_inv.mor[f][ib]][ib] != f) {
                rep.set("invertible", false);
                rep.add_violation({"invertible", {f, b}, "morphism inverse laws fail"});
            }
        }

    rep.set("r_components", true);
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            for (long c = 0; c < x.n_obj; ++c) {
                long m = r[a][b][c];
                if (m < 0 || x.src[m] != ob(ob(a, b), c) || x.tgt[m] != ob(ob(a, c), ob(b, c))) {
                    rep.set("r_components", false);
                    rep.add_violation({"r_components", {a, b, c}, "component has wrong endpoints"});
                }
            }
    if (!rep.flag("r_components")) return rep;

    rep.set("r_natural", true);
    for (long f = 0; f < x.n_mor; ++f)
        for (long g = 0; g < x.n_mor; ++g)
            for (long h = 0; h < x.n_mor; ++h) {
                long lhs = x.comp[r[x.tgt[f]][x.tgt[g]][x.tgt[h]]][lhd.mor[lhd.mor[f][g]][h]];
                long rhs = x.comp[lhd.mor[lhd.mor[f][h]][lhd.mor[g][h]]][r[x.src[f]][x.src[g]][x.src[h]]];
                if (lhs != rhs || lhs < 0) {
                    rep.set("r_natural", false);
                    rep.add_violation({"r_natural", {f, g, h}, "naturality square fails"});
                }
            }

    rep.set("hexagon", true);
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            for (long c = 0; c < x.n_obj; ++c)
                for (long w = 0; w < x.n_obj; ++w) {
                    long left = x.comp[lhd.mor[r[a][c][w]][r[b][c][w]]]
                                      [x.comp[r[ob(a, c)][ob(b, c)][w]][lhd.mor[r[a][b][c]][x.id[w]]]];
                    long iz_iw = lhd.mor[x.id[c]][x.id[w]];
                    long right = x.comp[r[ob(a, w)][ob(b, w)][ob(c, w)]]
                                       [x.comp[lhd.mor[r[a][b][w]][iz_iw]][r[ob(a, b)][c][w]]];
                    if (left != right || left < 0) {
                        rep.set("hexagon", false);
                        rep.add_violation({"hexagon", {a, b, c, w}, "distributor identity fails"});
                    }
                }
    return rep;
}

namespace {

bool is_permutation(const std::vector<long>& v, long n) {
    std::vector<bool> seen(n, false);
    for (long x : v) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return long(v.size()) == n;
}

}  // namespace

Report check_strict_2rack(const FinCat& x, const FinBifunctor& lhd) {
    Report rep = check_semistrict_2rack(x, lhd, identity_distributor(x, lhd), lhd);
    // With the identity distributor the inverse tables above are bogus; decide
    // invertibility by enumeration instead and rebuild the flag.
    for (auto& [name, ok] : rep.flags)
        if (name == "invertible" || name.rfind("inv_", 0) == 0) ok = true;
    std::erase_if(rep.violations, [](const Violation& v) { return v.flag == "invertible" || v.flag.rfind("inv_", 0) == 0; });

    rep.set("objects_rack", true);
    for (long b = 0; b < x.n_obj; ++b) {
        std::vector<long> col(x.n_obj);
        for (long a = 0; a < x.n_obj; ++a) col[a] = lhd.obj[a][b];
        if (!is_permutation(col, x.n_obj)) {
            rep.set("objects_rack", false);
            rep.add_violation({"objects_rack", {b}, "right translation is not bijective"});
        }
    }
    for (long a = 0; a < x.n_obj; ++a)
        for (long b = 0; b < x.n_obj; ++b)
            for (long c = 0; c < x.n_obj; ++c)
                if (lhd.obj[lhd.obj[a][b]][c] != lhd.obj[lhd.obj[a][c]][lhd.obj[b][c]]) {
                    rep.set("objects_rack", false);
                    rep.add_violation({"objects_rack", {a, b, c}, "self-distributivity fails"});
                }

    rep.set("morphisms_rack", true);
    for (long g = 0; g < x.n_mor; ++g) {
        std::vector<long> col(x.n_mor);
        for (long f = 0; f < x.n_mor; ++f) col[f] = lhd.mor[f][g];
        if (!is_permutation(col, x.n_mor)) {
            rep.set("morphisms_rack", false);
            rep.add_violation({"morphisms_rack", {g}, "right translation is not bijective"});
        }
    }
    for (long f = 0; f < x.n_mor; ++f)
        for (long g = 0; g < x.n_mor; ++g)
            for (long h = 0; h < x.n_mor; ++h)
                if (lhd.mor[lhd.mor[f][g]][h] != lhd.mor[lhd.mor[f][h]][lhd.mor[g][h]]) {
                    rep.set("morphisms_rack", false);
                    rep.add_violation({"morphisms_rack", {f, g, h}, "self-distributivity fails"});
                }
    return rep;
}

FinGroup cyclic_group(long n) {
    FinGroup g;
    g.n = n;
    g.unit = 0;
    g.mul.assign(n, std::vector<long>(n));
    g.inv.assign(n, 0);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
        g.inv[a] = (n - a) % n;
    }
    return g;
}

FinGroup symmetric_group_3() {
    // permutations of {0,1,2} listed as images; composition p∘q
    const long perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto index_of = [&](const long p[3]) {
        for (long i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1L;
    };
    FinGroup g;
    g.n = 6;
    g.unit = 0;
    g.mul.assign(6, std::vector<long>(6));
    g.inv.assign(6, 0);
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b) {
            long c[3];
            for (long i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            g.mul[a][b] = index_of(c);
        }
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b)
            if (g.mul[a][b] == 0) g.inv[a] = b;
    return g;
}

Report check_group(const FinGroup& g) {
    Report rep;
    bool assoc = true, unit = true, inv = true;
    for (long a = 0; a < g.n; ++a) {
        unit = unit && g.mul[g.unit][a] == a && g.mul[a][g.unit] == a;
        inv = inv && g.mul[a][g.inv[a]] == g.unit && g.mul[g.inv[a]][a] == g.unit;
        for (long b = 0; b < g.n; ++b)
            for (long c = 0; c < g.n; ++c) assoc = assoc && g.mul[g.mul[a][b]][c] == g.mul[a][g.mul[b][c]];
    }
    rep.set("associativity", assoc);
    rep.set("unit", unit);
    rep.set("inverses", inv);
    return rep;
}

Report check_crossed_module(const CrossedModule& cm) {
    Report rep;
    rep.merge(check_group(cm.g), "g_");
    rep.merge(check_group(cm.h), "h_");
    bool bd_hom = true, act = true, equivariance = true, peiffer = true;
    for (long h1 = 0; h1 < cm.h.n; ++h1)
        for (long h2 = 0; h2 < cm.h.n; ++h2)
            bd_hom = bd_hom && cm.boundary[cm.h.mul[h1][h2]] == cm.g.mul[cm.boundary[h1]][cm.boundary[h2]];
    for (long a = 0; a < cm.g.n; ++a)
        for (long b = 0; b < cm.g.n; ++b)
            for (long h = 0; h < cm.h.n; ++h)
                act = act && cm.action[cm.g.mul[a][b]][h] == cm.action[a][cm.action[b][h]];
    for (long h = 0; h < cm.h.n; ++h)
        act = act && cm.action[cm.g.unit][h] == h;
    for (long a = 0; a < cm.g.n; ++a)
        for (long h1 = 0; h1 < cm.h.n; ++h1)
            for (long h2 = 0; h2 < cm.h.n; ++h2)
                act = act && cm.action[a][cm.h.mul[h1][h2]] == cm.h.mul[cm.action[a][h1]][cm.action[a][h2]];
    for (long a = 0; a < cm.g.n; ++a)
        for (long h = 0; h < cm.h.n; ++h) {
            long lhs = cm.boundary[cm.action[a][h]];
            long rhs = cm.g.mul[cm.g.mul[a][cm.boundary[h]]][cm.g.inv[a]];
            equivariance = equivariance && lhs == rhs;
        }
    for (long h1 = 0; h1 < cm.h.n; ++h1)
        for (long h2 = 0; h2 < cm.h.n; ++h2) {
            long lhs = cm.action[cm.boundary[h1]][h2];
            long rhs = cm.h.mul[cm.h.mul[h1][h2]][cm.h.inv[h1]];
            peiffer = peiffer && lhs == rhs;
        }
    rep.set("boundary_hom", bd_hom);
    rep.set("action", act);
    rep.set("equivariance", equivariance);
    rep.set("peiffer", peiffer);
    return rep;
}

Strict2Group two_group_from_crossed_module(const CrossedModule& cm) {
    Report rep = check_crossed_module(cm);
    if (!rep.pass()) throw StructureError("crossed module fails its laws");
    Strict2Group out;
    out.g = cm.g;
    out.h = cm.h;
    long ng = cm.g.n, nh = cm.h.n;
    FinCat& cat = out.cat;
    cat.n_obj = ng;
    cat.n_mor = ng * nh;
    auto midx = [&](long g, long h) { return g * nh + h; };
    cat.src.assign(cat.n_mor, 0);
    cat.tgt.assign(cat.n_mor, 0);
    for (long g = 0; g < ng; ++g)
        for (long h = 0; h < nh; ++h) {
            cat.src[midx(g, h)] = g;
            cat.tgt[midx(g, h)] = cm.g.mul[cm.boundary[h]][g];
        }
    cat.id.assign(ng, 0);
    for (long g = 0; g < ng; ++g) cat.id[g] = midx(g, cm.h.unit);
    cat.comp.assign(cat.n_mor, std::vector<long>(cat.n_mor, -1));
    for (long f = 0; f < cat.n_mor; ++f)
        for (long g2 = 0; g2 < cat.n_mor; ++g2) {
            if (cat.tgt[f] != cat.src[g2]) continue;
            long gf = f / nh, hf = f % nh, hg = g2 % nh;
            cat.comp[g2][f] = midx(gf, cm.h.mul[hg][hf]);
        }
    out.obj_tensor = cm.g.mul;
    out.mor_tensor.assign(cat.n_mor, std::vector<long>(cat.n_mor, -1));
    for (long f = 0; f < cat.n_mor; ++f)
        for (long g2 = 0; g2 < cat.n_mor; ++g2) {
            long ga = f / nh, ha = f % nh, gb = g2 / nh, hb = g2 % nh;
            out.mor_tensor[f][g2] = midx(cm.g.mul[ga][gb], cm.h.mul[ha][cm.action[ga][hb]]);
        }
    out.unit_obj = cm.g.unit;
    out.obj_inverse = cm.g.inv;
    out.mor_comp_inverse.assign(cat.n_mor, -1);
    for (long f = 0; f < cat.n_mor; ++f) {
        long g = f / nh, h = f % nh;
        out.mor_comp_inverse[f] = midx(cm.g.mul[cm.boundary[h]][g], cm.h.inv[h]);
    }
    return out;
}

Report check_strict_2group(const Strict2Group& g2) {
    Report rep;
    rep.merge(check_fincat(g2.cat), "cat_");
    const FinCat& c = g2.cat;
    bool hom = true, functor = true, unit = true, obj_inv = true, mor_inv = true, assoc = true;
    for (long f = 0; f < c.n_mor; ++f)
        for (long g = 0; g < c.n_mor; ++g) {
            long t = g2.mor_tensor[f][g];
            hom = hom && c.src[t] == g2.obj_tensor[c.src[f]][c.src[g]] &&
                  c.tgt[t] == g2.obj_tensor[c.tgt[f]][c.tgt[g]];
        }
    for (long a = 0; a < c.n_obj; ++a)
        for (long b = 0; b < c.n_obj; ++b)
            functor = functor && g2.mor_tensor[c.id[a]][c.id[b]] == c.id[g2.obj_tensor[a][b]];
    // interchange: (f2⊗g)∘... tensor preserves composition
    for (long f = 0; f < c.n_mor; ++f)
        for (long f2 = 0; f2 < c.n_mor; ++f2) {
            if (c.tgt[f] != c.src[f2]) continue;
            for (long g = 0; g < c.n_mor; ++g)
                for (long gg = 0; gg < c.n_mor; ++gg) {
                    if (c.tgt[g] != c.src[gg]) continue;
                    functor = functor && g2.mor_tensor[c.comp[f2][f]][c.comp[gg][g]] ==
                                             c.comp[g2.mor_tensor[f2][gg]][g2.mor_tensor[f][g]];
                }
        }
    for (long f = 0; f < c.n_mor; ++f) {
        unit = unit && g2.mor_tensor[f][c.id[g2.unit_obj]] == f && g2.mor_tensor[c.id[g2.unit_obj]][f] == f;
        long finv = g2.mor_comp_inverse[f];
        mor_inv = mor_inv && c.comp[finv][f] == c.id[c.src[f]] && c.comp[f][finv] == c.id[c.tgt[f]];
        for (long g = 0; g < c.n_mor; ++g)
            for (long h = 0; h < c.n_mor; ++h)
                assoc = assoc &&
                        g2.mor_tensor[g2.mor_tensor[f][g]][h] == g2.mor_tensor[f][g2.mor_tensor[g][h]];
    }
    for (long a = 0; a < c.n_obj; ++a) {
        obj_inv = obj_inv && g2.obj_tensor[a][g2.obj_inverse[a]] == g2.unit_obj &&
                  g2.obj_tensor[g2.obj_inverse[a]][a] == g2.unit_obj;
        obj_inv = obj_inv &&
                  g2.mor_tensor[c.id[a]][c.id[g2.obj_inverse[a]]] == c.id[g2.unit_obj] &&
                  g2.mor_tensor[c.id[g2.obj_inverse[a]]][c.id[a]] == c.id[g2.unit_obj];
    }
    rep.set("tensor_endpoints", hom);
    rep.set("tensor_functor", functor);
    rep.set("tensor_assoc", assoc);
    rep.set("unit_laws", unit);
    rep.set("object_inverses", obj_inv);
    rep.set("morphism_inverses", mor_inv);

    // whisker factorisation of inverses across a composable pair
    bool whisker = true;
    for (long b = 0; b < c.n_mor; ++b)
        for (long b2 = 0; b2 < c.n_mor; ++b2) {
            if (c.tgt[b] != c.src[b2]) continue;
            long h1 = c.src[b], h2 = c.tgt[b], h3 = c.tgt[b2];
            auto ii = [&](long o) { return c.id[g2.obj_inverse[o]]; };
            long binv = g2.mor_comp_inverse[b], b2inv = g2.mor_comp_inverse[b2];
            long comp_inv = g2.mor_comp_inverse[c.comp[b2][b]];
            long lhs = g2.mor_tensor[g2.mor_tensor[ii(h1)][comp_inv]][ii(h3)];
            long first = g2.mor_tensor[g2.mor_tensor[ii(h1)][binv]][ii(h2)];
            long second = g2.mor_tensor[g2.mor_tensor[ii(h2)][b2inv]][ii(h3)];
            whisker = whisker && lhs == c.comp[second][first];
        }
    rep.set("inverse_whisker", whisker);
    return rep;
}

ActionTables left_translation_action(const Strict2Group& g2) {
    ActionTables f;
    f.obj.assign(g2.cat.n_obj, std::vector<long>(g2.cat.n_obj));
    for (long a = 0; a < g2.cat.n_obj; ++a)
        for (long x = 0; x < g2.cat.n_obj; ++x) f.obj[a][x] = g2.obj_tensor[a][x];
    f.mor.assign(g2.cat.n_mor, std::vector<long>(g2.cat.n_mor));
    for (long al = 0; al < g2.cat.n_mor; ++al)
        for (long xi = 0; xi < g2.cat.n_mor; ++xi) f.mor[al][xi] = g2.mor_tensor[al][xi];
    return f;
}

ConjugationRack conjugation_rack(const Strict2Group& g2, const FinCat& x, const ActionTables& f) {
    const FinCat& gc = g2.cat;
    // strict action laws
    for (long a = 0; a < gc.n_obj; ++a)
        for (long b = 0; b < gc.n_obj; ++b)
            for (long o = 0; o < x.n_obj; ++o)
                if (f.obj[g2.obj_tensor[a][b]][o] != f.obj[a][f.obj[b][o]])
                    throw InputError("action law fails at object pair " + tuple_str({a, b, o}));
    for (long al = 0; al < gc.n_mor; ++al)
        for (long be = 0; be < gc.n_mor; ++be)
            for (long xi = 0; xi < x.n_mor; ++xi)
                if (f.mor[g2.mor_tensor[al][be]][xi] != f.mor[al][f.mor[be][xi]])
                    throw InputError("action law fails at morphism pair " + tuple_str({al, be, xi}));
    // F is a functor
    for (long al = 0; al < gc.n_mor; ++al)
        for (long xi = 0; xi < x.n_mor; ++xi) {
            long img = f.mor[al][xi];
            if (x.src[img] != f.obj[gc.src[al]][x.src[xi]] || x.tgt[img] != f.obj[gc.tgt[al]][x.tgt[xi]])
                throw InputError("action tables are not functorial at pair " + tuple_str({al, xi}));
        }
    for (long a = 0; a < gc.n_obj; ++a)
        for (long o = 0; o < x.n_obj; ++o)
            if (f.mor[gc.id[a]][x.id[o]] != x.id[f.obj[a][o]])
                throw InputError("action tables do not preserve identities at " + tuple_str({a, o}));

    ConjugationRack out;
    FinCat& p = out.cat;
    p.n_obj = gc.n_obj * x.n_obj;
    p.n_mor = gc.n_mor * x.n_mor;
    auto oidx = [&](long g, long o) { return g * x.n_obj + o; };
    auto midx = [&](long al, long xi) { return al * x.n_mor + xi; };
    p.src.assign(p.n_mor, 0);
    p.tgt.assign(p.n_mor, 0);
    for (long al = 0; al < gc.n_mor; ++al)
        for (long xi = 0; xi < x.n_mor; ++xi) {
            p.src[midx(al, xi)] = oidx(gc.src[al], x.src[xi]);
            p.tgt[midx(al, xi)] = oidx(gc.tgt[al], x.tgt[xi]);
        }
    p.id.assign(p.n_obj, 0);
    for (long g = 0; g < gc.n_obj; ++g)
        for (long o = 0; o < x.n_obj; ++o) p.id[oidx(g, o)] = midx(gc.id[g], x.id[o]);
    p.comp.assign(p.n_mor, std::vector<long>(p.n_mor, -1));
    for (long m1 = 0; m1 < p.n_mor; ++m1)
        for (long m2 = 0; m2 < p.n_mor; ++m2) {
            if (p.tgt[m1] != p.src[m2]) continue;
            long a1 = m1 / x.n_mor, x1 = m1 % x.n_mor;
            long a2 = m2 / x.n_mor, x2 = m2 % x.n_mor;
            if (gc.comp[a2][a1] < 0 || x.comp[x2][x1] < 0) continue;
            p.comp[m2][m1] = midx(gc.comp[a2][a1], x.comp[x2][x1]);
        }

    out.lhd.obj.assign(p.n_obj, std::vector<long>(p.n_obj, -1));
    for (long g = 0; g < gc.n_obj; ++g)
        for (long o = 0; o < x.n_obj; ++o)
            for (long h = 0; h < gc.n_obj; ++h)
                for (long o2 = 0; o2 < x.n_obj; ++o2) {
                    long conj = g2.obj_tensor[g2.obj_tensor[h][g]][g2.obj_inverse[h]];
                    out.lhd.obj[oidx(g, o)][oidx(h, o2)] = oidx(conj, f.obj[h][o]);
                }
    out.lhd.mor.assign(p.n_mor, std::vector<long>(p.n_mor, -1));
    for (long al = 0; al < gc.n_mor; ++al)
        for (long xi = 0; xi < x.n_mor; ++xi)
            for (long be = 0; be < gc.n_mor; ++be)
                for (long eta = 0; eta < x.n_mor; ++eta) {
                    long h1 = gc.src[be], h2 = gc.tgt[be];
                    long binv = g2.mor_comp_inverse[be];
                    long whisker =
                        g2.mor_tensor[g2.mor_tensor[gc.id[g2.obj_inverse[h1]]][binv]][gc.id[g2.obj_inverse[h2]]];
                    long gm = g2.mor_tensor[g2.mor_tensor[be][al]][whisker];
                    out.lhd.mor[midx(al, xi)][midx(be, eta)] = midx(gm, f.mor[be][xi]);
                }
    return out;
}

}  // namespace tetra
