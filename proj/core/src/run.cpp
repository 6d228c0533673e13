#include "bicross/run.hpp"

#include "bicross/cosimplicial.hpp"
#include "bicross/errors.hpp"
#include "bicross/input.hpp"
#include "bicross/kac.hpp"
#include "bicross/mpcomplex.hpp"

#include <chrono>

namespace bicross {

namespace {

using nlohmann::ordered_json;

ordered_json factors_json(const Presentation& p) { return p.factors_string(); }

ordered_json matrix_json(const Mat64& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

i64 need_modulus(const RunOptions& opt) {
    if (opt.modulus < 2) throw AlgebraError("BadModulus", "--modulus m with m >= 2 is required");
    return opt.modulus;
}

long guard_of(const RunOptions& opt) { return opt.force ? (1L << 31) : (1L << 24); }

Report run_task(const RunOptions& opt) {
    Report rep;
    rep.task = opt.command;
    InputDocument doc = parse_input_file(opt.input_path);
    rep.payload["input"] = opt.input_path;

    if (opt.command == "validate") {
        ordered_json blocks = ordered_json::array();
        for (const auto& [kind, name] : doc.declared) {
            ordered_json b;
            b["kind"] = kind;
            b["name"] = name;
            if (kind == "group") b["order"] = doc.group(name).order();
            if (kind == "matchedpair") {
                const auto& mp = doc.pair(name);
                b["T"] = mp.T().order();
                b["N"] = mp.N().order();
                b["left_trivial"] = mp.left_action_trivial();
                b["right_trivial"] = mp.right_action_trivial();
            }
            blocks.push_back(b);
        }
        rep.payload["valid"] = blocks;
        return rep;
    }

    if (opt.command == "group-cohomology") {
        i64 m = need_modulus(opt);
        const FiniteGroup& g = doc.group(doc.resolve("group", opt.target));
        rep.payload["group"] = g.name();
        rep.payload["modulus"] = m;
        ordered_json hs;
        for (int n = 1; n <= opt.max_degree; ++n) {
            Presentation p = group_cohomology(g, CoefficientModule::trivial(m), n, guard_of(opt));
            hs["H^" + std::to_string(n)] = factors_json(p);
        }
        rep.payload["cohomology"] = hs;
        return rep;
    }

    if (opt.command == "mp-cohomology") {
        i64 m = need_modulus(opt);
        std::string name = doc.resolve("matchedpair", opt.target);
        const GroupMatchedPair& mp = doc.pair(name);
        rep.payload["pair"] = name;
        rep.payload["modulus"] = m;
        ordered_json hs;
        for (int i = 1; i <= opt.max_degree; ++i) {
            MPCohomology h = matched_pair_cohomology(mp, m, i, guard_of(opt));
            hs["H^" + std::to_string(i)] = factors_json(h.pres);
        }
        rep.payload["cohomology"] = hs;
        return rep;
    }

    if (opt.command == "bidegree") {
        i64 m = need_modulus(opt);
        if (opt.bound_p < 1 || opt.bound_q < 1)
            throw AlgebraError("BadDegree", "bidegree needs --bound i j with i, j >= 1");
        std::string name = doc.resolve("matchedpair", opt.target);
        const GroupMatchedPair& mp = doc.pair(name);
        int i = opt.bound_p, j = opt.bound_q;
        MPDoubleComplex cx(mp, m, i + 1, j + 1, guard_of(opt));
        Presentation b = bidegree_cohomology(cx, i, j);
        rep.payload["pair"] = name;
        rep.payload["modulus"] = m;
        rep.payload["i"] = i;
        rep.payload["j"] = j;
        rep.payload["bidegree"] = factors_json(b);
        Presentation it = iterated_cohomology(mp, m, i, j);
        rep.payload["iterated"] = factors_json(it);
        rep.payload["isomorphic"] = (b.invariant_factors() == it.invariant_factors());
        rep.ok = rep.payload["isomorphic"].get<bool>();
        return rep;
    }

    if (opt.command == "kac-verify") {
        i64 m = need_modulus(opt);
        std::string name = doc.resolve("matchedpair", opt.target);
        const GroupMatchedPair& mp = doc.pair(name);
        auto conv = (opt.convention == "b") ? KacEngine::PsiConvention::B
                                            : KacEngine::PsiConvention::A;
        KacSequenceReport kr = verify_kac_exactness(mp, m, conv, guard_of(opt));
        rep.payload["pair"] = name;
        rep.payload["modulus"] = m;
        rep.payload["convention"] = opt.convention;
        ordered_json groups;
        for (size_t i = 0; i < kr.group_names.size(); ++i)
            groups[kr.group_names[i]] = kr.group_factors[i];
        rep.payload["groups"] = groups;
        rep.payload["h3_presented"] = kr.h3_presented;
        ordered_json maps = ordered_json::array();
        for (const auto& mrep : kr.maps) {
            ordered_json mj;
            mj["name"] = mrep.name;
            mj["matrix"] = matrix_json(mrep.matrix);
            maps.push_back(mj);
        }
        rep.payload["maps"] = maps;
        ordered_json pos = ordered_json::array();
        for (const auto& p : kr.positions) {
            ordered_json pj;
            pj["at"] = p.at;
            pj["image"] = p.image_factors;
            pj["kernel"] = p.kernel_factors;
            pj["exact"] = p.exact;
            pos.push_back(pj);
        }
        rep.payload["positions"] = pos;
        rep.payload["res2_injective"] = kr.res1_injective;
        rep.payload["composites_zero"] = kr.composites_zero;
        rep.payload["all_exact"] = kr.all_exact;
        rep.ok = kr.all_exact;
        return rep;
    }

    if (opt.command == "method6") {
        i64 m = need_modulus(opt);
        std::string name = doc.resolve("method6", opt.target);
        const auto& blk = doc.method6s.at(name);
        Method6Input in{doc.lies.at(blk.lie),
                        doc.group(blk.points),
                        doc.group(blk.other),
                        blk.lieside != "N",
                        {},
                        {},
                        {},
                        m};
        if (!blk.pointsaction.empty()) {
            in.act_points = doc.lieactions.at(blk.pointsaction).matrices;
        } else {
            in.act_points.assign(in.points.order(), RationalMatrix::identity(in.lie.dim()));
        }
        if (!blk.otheraction.empty()) {
            in.act_other = doc.lieactions.at(blk.otheraction).matrices;
        } else {
            in.act_other.assign(in.other.order(), RationalMatrix::identity(in.lie.dim()));
        }
        if (!blk.onother.empty()) {
            in.act_on_other = doc.groupactions.at(blk.onother).table;
        } else {
            in.act_on_other.assign(in.points.order(), std::vector<int>(in.other.order()));
            for (int p = 0; p < in.points.order(); ++p)
                for (int o = 0; o < in.other.order(); ++o) in.act_on_other[p][o] = o;
        }
        Method6Report mr = method6(in);
        rep.payload["block"] = name;
        rep.payload["modulus"] = m;
        rep.payload["lie_side"] = mr.lie_side;
        rep.payload["dim_H2_lie"] = mr.dim_h2_lie;
        rep.payload["dim_H2_lie_points_invariant"] = mr.dim_h2_lie_points;
        rep.payload["dim_H2_lie_other_invariant"] = mr.dim_h2_lie_other;
        rep.payload["dim_H2_lie_semidirect_invariant"] = mr.dim_h2_lie_semidirect;
        rep.payload["H2_group_side"] = mr.h2_other;
        rep.payload["H2_group_side_invariant"] = mr.h2_other_invariant;
        rep.payload["piece_lie_quotient_dim"] = mr.piece1_dim;
        rep.payload["piece_group_quotient"] = mr.piece2;
        rep.payload["orders_coprime"] = mr.coprime;
        rep.payload["comparison_iso"] = mr.phi_iso;
        rep.payload["conclusion"] = mr.conclusion;
        rep.payload["notes"] = mr.notes;
        return rep;
    }

    if (opt.command == "ez-verify") {
        i64 m = need_modulus(opt);
        std::string name = doc.resolve("matchedpair", opt.target);
        const GroupMatchedPair& mp = doc.pair(name);
        int nmax = opt.max_degree;
        auto x = bicomplex_from_matched_pair(mp, m, nmax + 1, guard_of(opt));
        EZReport ez = verify_ez(x, nmax);
        rep.payload["pair"] = name;
        rep.payload["modulus"] = m;
        ordered_json degs = ordered_json::array();
        for (size_t n = 0; n < ez.tot_factors.size(); ++n) {
            ordered_json dj;
            dj["degree"] = n;
            dj["H_tot"] = ez.tot_factors[n];
            dj["H_diag"] = ez.diag_factors[n];
            dj["inverse_pair"] = static_cast<bool>(ez.iso[n]);
            degs.push_back(dj);
        }
        rep.payload["degrees"] = degs;
        rep.payload["all_iso"] = ez.all_iso;
        rep.ok = ez.all_iso;
        return rep;
    }

    throw AlgebraError("UnknownCommand", opt.command);
}

} // namespace

RunResult run(const RunOptions& opt) {
    RunResult res;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Report rep = run_task(opt);
        rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - t0)
                                               .count());
        res.output = (opt.format == "structured") ? rep.structured() : rep.human();
        res.exit_code = rep.ok ? 0 : 1;
    } catch (const ParseError& e) {
        res.output = structured_error("ParseError", e.what());
        res.exit_code = 2;
    } catch (const SizeGuardError& e) {
        res.output = structured_error(e.code(), e.witness());
        res.exit_code = 4;
    } catch (const AlgebraError& e) {
        res.output = structured_error(e.code(), e.witness());
        res.exit_code = 3;
    } catch (const std::exception& e) {
        res.output = structured_error("InternalError", e.what());
        res.exit_code = 3;
    }
    return res;
}

} // namespace bicross
