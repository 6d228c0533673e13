#include "bicross/input.hpp"

#include "bicross/errors.hpp"

#include <fstream>
#include <sstream>

namespace bicross {

namespace {

struct Lines {
    std::vector<std::string> raw;
    size_t pos = 0;

    bool done() const { return pos >= raw.size(); }
    int lineno() const { return static_cast<int>(pos) + 1; }

    // next nonempty, non-comment line, tokenized
    bool next(std::vector<std::string>& toks) {
        while (pos < raw.size()) {
            std::string line = raw[pos];
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream is(line);
            toks.clear();
            std::string t;
            while (is >> t) toks.push_back(t);
            if (!toks.empty()) return true;
            ++pos;
        }
        return false;
    }
    void consume() { ++pos; }
};

int to_int(const std::string& s, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError(line, 1, "expected an integer, got '" + s + "'");
    }
}

mpq_class to_rational(const std::string& s, int line) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (...) {
        throw ParseError(line, 1, "expected a rational, got '" + s + "'");
    }
}

std::vector<std::vector<int>> read_int_rows(Lines& in, int nrows, int ncols) {
    std::vector<std::vector<int>> rows;
    std::vector<std::string> toks;
    for (int r = 0; r < nrows; ++r) {
        if (!in.next(toks)) throw ParseError(in.lineno(), 1, "unexpected end of table");
        if (static_cast<int>(toks.size()) != ncols)
            throw ParseError(in.lineno(), 1,
                             "expected " + std::to_string(ncols) + " entries, got " +
                                 std::to_string(toks.size()));
        std::vector<int> row;
        for (const auto& t : toks) row.push_back(to_int(t, in.lineno()));
        rows.push_back(std::move(row));
        in.consume();
    }
    return rows;
}

} // namespace

const FiniteGroup& InputDocument::group(const std::string& name) const {
    auto it = groups.find(name);
    if (it == groups.end()) throw AlgebraError("UnknownName", "group '" + name + "'");
    return it->second;
}

const GroupMatchedPair& InputDocument::pair(const std::string& name) const {
    auto it = pairs.find(name);
    if (it == pairs.end()) throw AlgebraError("UnknownName", "matched pair '" + name + "'");
    return it->second;
}

std::string InputDocument::resolve(const std::string& kind, const std::string& target) const {
    if (!target.empty()) return target;
    std::string found;
    for (const auto& [k, n] : declared)
        if (k == kind) {
            if (!found.empty())
                throw AlgebraError("AmbiguousTarget",
                                   "several " + kind + " blocks; use --target");
            found = n;
        }
    if (found.empty()) throw AlgebraError("UnknownName", "no " + kind + " block in the input");
    return found;
}

InputDocument parse_input(const std::string& text) {
    InputDocument doc;
    Lines in;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) in.raw.push_back(line);
    }
    std::vector<std::string> toks;
    while (in.next(toks)) {
        int at = in.lineno();
        const std::string kind = toks[0];
        if (toks.size() < 2) throw ParseError(at, 1, "block '" + kind + "' needs a name");
        const std::string name = toks[1];
        in.consume();

        auto expect_end = [&]() {
            std::vector<std::string> t;
            if (!in.next(t) || t[0] != "end")
                throw ParseError(in.lineno(), 1, "expected 'end' of block '" + name + "'");
            in.consume();
        };

        if (kind == "group") {
            std::vector<std::string> t;
            if (!in.next(t)) throw ParseError(in.lineno(), 1, "incomplete group block");
            FiniteGroup g;
            if (t[0] == "cyclic" || t[0] == "symmetric" || t[0] == "dihedral") {
                int n = to_int(t.at(1), in.lineno());
                in.consume();
                if (t[0] == "cyclic") g = FiniteGroup::cyclic(n);
                else if (t[0] == "symmetric") g = FiniteGroup::symmetric(n);
                else g = FiniteGroup::dihedral(n);
            } else if (t[0] == "trivial") {
                in.consume();
                g = FiniteGroup::trivial();
            } else if (t[0] == "order") {
                int n = to_int(t.at(1), in.lineno());
                in.consume();
                if (!in.next(t) || t[0] != "table")
                    throw ParseError(in.lineno(), 1, "expected 'table'");
                in.consume();
                g = FiniteGroup::validate(read_int_rows(in, n, n), name);
            } else {
                throw ParseError(in.lineno(), 1, "unknown group form '" + t[0] + "'");
            }
            expect_end();
            g.set_name(name);
            doc.groups.emplace(name, std::move(g));
            doc.declared.emplace_back("group", name);
        } else if (kind == "matchedpair") {
            std::string tn, nn;
            std::vector<std::vector<int>> al, ar;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "T") tn = t.at(1), in.consume();
                else if (t[0] == "N") nn = t.at(1), in.consume();
                else if (t[0] == "actleft") {
                    in.consume();
                    al = read_int_rows(in, doc.group(tn).order(), doc.group(nn).order());
                } else if (t[0] == "actright") {
                    in.consume();
                    ar = read_int_rows(in, doc.group(tn).order(), doc.group(nn).order());
                } else
                    throw ParseError(in.lineno(), 1, "unknown matchedpair field '" + t[0] + "'");
            }
            expect_end();
            doc.pairs.emplace(name,
                              GroupMatchedPair::validate(doc.group(tn), doc.group(nn), al, ar));
            doc.declared.emplace_back("matchedpair", name);
        } else if (kind == "factorization") {
            std::string gn;
            std::vector<int> nl, tl;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "group") gn = t.at(1), in.consume();
                else if (t[0] == "N" || t[0] == "T") {
                    std::vector<int>& dst = (t[0] == "N") ? nl : tl;
                    for (size_t i = 1; i < t.size(); ++i) dst.push_back(to_int(t[i], in.lineno()));
                    in.consume();
                } else
                    throw ParseError(in.lineno(), 1, "unknown factorization field '" + t[0] + "'");
            }
            expect_end();
            doc.pairs.emplace(name, from_exact_factorization(doc.group(gn), nl, tl));
            doc.declared.emplace_back("matchedpair", name);
        } else if (kind == "liealgebra") {
            int dim = -1;
            bool built = false;
            std::vector<RationalMatrix> c;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "dim") {
                    dim = to_int(t.at(1), in.lineno());
                    if (dim < 1 || dim > 64)
                        throw ParseError(in.lineno(), 1, "dim out of range");
                    c.assign(dim, RationalMatrix(dim, dim));
                    in.consume();
                } else if (t[0] == "sl") {
                    int n = to_int(t.at(1), in.lineno());
                    if (n < 2 || n > 8) throw ParseError(in.lineno(), 1, "sl n with 2 <= n <= 8");
                    in.consume();
                    doc.lies.emplace(name, LieAlgebraData::special_linear(n));
                    built = true;
                } else if (t[0] == "bracket") {
                    if (dim < 0) throw ParseError(in.lineno(), 1, "dim must come first");
                    int i = to_int(t.at(1), in.lineno()), j = to_int(t.at(2), in.lineno());
                    if (i < 0 || i >= dim || j < 0 || j >= dim)
                        throw ParseError(in.lineno(), 1, "bracket index out of range");
                    if (t.at(3) != ":") throw ParseError(in.lineno(), 1, "expected ':'");
                    if (static_cast<int>(t.size()) != 4 + dim)
                        throw ParseError(in.lineno(), 1, "expected " + std::to_string(dim) +
                                                             " coefficients");
                    for (int k = 0; k < dim; ++k) {
                        mpq_class v = to_rational(t[4 + k], in.lineno());
                        c[k].at(i, j) = v;
                        c[k].at(j, i) = -v;
                    }
                    in.consume();
                } else
                    throw ParseError(in.lineno(), 1, "unknown liealgebra field '" + t[0] + "'");
            }
            expect_end();
            if (!built) {
                if (dim < 0) throw ParseError(at, 1, "liealgebra block without dim or sl");
                doc.lies.emplace(name, LieAlgebraData(dim, std::move(c)));
            }
            doc.declared.emplace_back("liealgebra", name);
        } else if (kind == "lieaction") {
            InputDocument::LieActionBlock blk;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "lie") blk.lie = t.at(1), in.consume();
                else if (t[0] == "group") blk.group = t.at(1), in.consume();
                else if (t[0] == "matrix") {
                    int el = to_int(t.at(1), in.lineno());
                    if (t.at(2) != ":") throw ParseError(in.lineno(), 1, "expected ':'");
                    auto lit = doc.lies.find(blk.lie);
                    if (lit == doc.lies.end())
                        throw ParseError(in.lineno(), 1, "lie must come before matrices");
                    int d = lit->second.dim();
                    if (static_cast<int>(t.size()) != 3 + d * d)
                        throw ParseError(in.lineno(), 1,
                                         "expected " + std::to_string(d * d) + " entries");
                    if (static_cast<int>(blk.matrices.size()) != el)
                        throw ParseError(in.lineno(), 1, "matrices must be listed in element order");
                    RationalMatrix m(d, d);
                    for (int k = 0; k < d * d; ++k)
                        m.at(k / d, k % d) = to_rational(t[3 + k], in.lineno());
                    blk.matrices.push_back(std::move(m));
                    in.consume();
                } else
                    throw ParseError(in.lineno(), 1, "unknown lieaction field '" + t[0] + "'");
            }
            expect_end();
            LieGroupAction check{doc.group(blk.group), blk.matrices};
            check.validate(doc.lies.at(blk.lie));
            doc.lieactions.emplace(name, std::move(blk));
            doc.declared.emplace_back("lieaction", name);
        } else if (kind == "groupaction") {
            InputDocument::GroupActionBlock blk;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "acting") blk.acting = t.at(1), in.consume();
                else if (t[0] == "on") blk.on = t.at(1), in.consume();
                else if (t[0] == "table") {
                    in.consume();
                    blk.table = read_int_rows(in, doc.group(blk.acting).order(),
                                              doc.group(blk.on).order());
                } else
                    throw ParseError(in.lineno(), 1, "unknown groupaction field '" + t[0] + "'");
            }
            expect_end();
            // the table must be an action by automorphisms
            {
                const FiniteGroup& a = doc.group(blk.acting);
                const FiniteGroup& o = doc.group(blk.on);
                std::vector<std::vector<int>> ar(a.order(), std::vector<int>(o.order()));
                for (int i = 0; i < a.order(); ++i)
                    for (int j = 0; j < o.order(); ++j) ar[i][j] = i;
                GroupMatchedPair::validate(a, o, blk.table, ar);
            }
            doc.groupactions.emplace(name, std::move(blk));
            doc.declared.emplace_back("groupaction", name);
        } else if (kind == "method6") {
            InputDocument::Method6Block blk;
            std::vector<std::string> t;
            while (in.next(t) && t[0] != "end") {
                if (t[0] == "lie") blk.lie = t.at(1), in.consume();
                else if (t[0] == "points") blk.points = t.at(1), in.consume();
                else if (t[0] == "other") blk.other = t.at(1), in.consume();
                else if (t[0] == "lieside") blk.lieside = t.at(1), in.consume();
                else if (t[0] == "pointsaction") blk.pointsaction = t.at(1), in.consume();
                else if (t[0] == "otheraction") blk.otheraction = t.at(1), in.consume();
                else if (t[0] == "onother") blk.onother = t.at(1), in.consume();
                else throw ParseError(in.lineno(), 1, "unknown method6 field '" + t[0] + "'");
            }
            expect_end();
            doc.method6s.emplace(name, std::move(blk));
            doc.declared.emplace_back("method6", name);
        } else {
            throw ParseError(at, 1, "unknown block kind '" + kind + "'");
        }
    }
    return doc;
}

InputDocument parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw AlgebraError("FileNotFound", path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_input(os.str());
}

} // namespace bicross
