#include "pcalg/lie_algebra.hpp"

#include <json.hpp>

#include <algorithm>

namespace pcalg {

using nlohmann::json;

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (index_.count(basis_[i])) throw lie_error("duplicate coordinate name " + basis_[i]);
        index_[basis_[i]] = static_cast<int>(i);
    }
}

int LieAlgebraSpec::index_of(const std::string& coord) const {
    auto it = index_.find(coord);
    return it == index_.end() ? -1 : it->second;
}

void LieAlgebraSpec::set_bracket_term(int i, int j, int k, const Scalar& c) {
    if (i < 0 || j < 0 || k < 0 || static_cast<size_t>(i) >= dim() ||
        static_cast<size_t>(j) >= dim() || static_cast<size_t>(k) >= dim())
        throw lie_error("structure constant index out of range");
    if (i == j) {
        if (!c.is_zero()) throw lie_error("nonzero bracket {x,x} declared");
        return;
    }
    if (c.is_zero()) return;
    Scalar v = (i < j) ? c : -c;
    auto key = std::minmax(i, j);
    auto& row = structure_[{key.first, key.second}];
    for (auto& [kk, cc] : row) {
        if (kk == k) {
            cc += v;
            if (cc.is_zero()) {
                row.erase(std::remove_if(row.begin(), row.end(),
                                         [k](const auto& e) { return e.first == k; }),
                          row.end());
                if (row.empty()) structure_.erase({key.first, key.second});
            }
            return;
        }
    }
    row.emplace_back(k, v);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::vector<std::pair<int, Scalar>> LieAlgebraSpec::bracket_coords(int i, int j) const {
    if (i == j) return {};
    auto key = std::minmax(i, j);
    auto it = structure_.find({key.first, key.second});
    if (it == structure_.end()) return {};
    if (i < j) return it->second;
    std::vector<std::pair<int, Scalar>> flipped;
    flipped.reserve(it->second.size());
    for (const auto& [k, c] : it->second) flipped.emplace_back(k, -c);
    return flipped;
}

Polynomial LieAlgebraSpec::bracket_poly(int i, int j) const {
    Polynomial p(dim());
    for (const auto& [k, c] : bracket_coords(i, j)) p += Polynomial::coordinate(dim(), k, c);
    return p;
}

void LieAlgebraSpec::add_subalgebra(const std::string& name, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
        if (i < 0 || static_cast<size_t>(i) >= dim()) throw lie_error("subalgebra index out of range");
    subalgebras_[name] = std::move(indices);
}

const std::vector<int>& LieAlgebraSpec::subalgebra(const std::string& name) const {
    auto it = subalgebras_.find(name);
    if (it == subalgebras_.end()) throw lie_error("unknown subalgebra: " + name);
    return it->second;
}

void LieAlgebraSpec::set_blocks(std::vector<std::vector<int>> blocks) {
    block_of_.assign(dim(), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int i : blocks[b]) {
            if (i < 0 || static_cast<size_t>(i) >= dim()) throw lie_error("block index out of range");
            if (block_of_[i] != -1) throw lie_error("blocks overlap at index " + std::to_string(i));
            block_of_[i] = static_cast<int>(b);
        }
    }
    for (size_t i = 0; i < dim(); ++i)
        if (block_of_[i] == -1) throw lie_error("blocks do not cover coordinate " + basis_[i]);
    blocks_ = std::move(blocks);
}

int LieAlgebraSpec::block_of(int index) const {
    if (block_of_.empty()) return -1;
    return block_of_[index];
}

bool LieAlgebraSpec::acts_diagonally(int i) const {
    for (size_t j = 0; j < dim(); ++j) {
        for (const auto& [k, c] : bracket_coords(i, static_cast<int>(j)))
            if (k != static_cast<int>(j) && !c.is_zero()) return false;
    }
    return true;
}

Scalar LieAlgebraSpec::weight(int cartan, int j) const {
    Scalar w(0);
    for (const auto& [k, c] : bracket_coords(cartan, j)) {
        if (k != j) throw lie_error("coordinate " + basis_[j] + " is not an eigenvector of " +
                                    basis_[cartan]);
        w = c;
    }
    return w;
}

const std::set<int> BlockTable::empty_{};

BlockTable::BlockTable(const LieAlgebraSpec& spec) : nblocks_(spec.block_count()) {
    if (nblocks_ == 0) throw lie_error("block table requested but no blocks declared");
    for (size_t i = 0; i < spec.dim(); ++i) {
        for (size_t j = i + 1; j < spec.dim(); ++j) {
            auto coords = spec.bracket_coords(static_cast<int>(i), static_cast<int>(j));
            if (coords.empty()) continue;
            int r = spec.block_of(static_cast<int>(i));
            int s = spec.block_of(static_cast<int>(j));
            for (const auto& [k, c] : coords) {
                (void)c;
                int t = spec.block_of(k);
                targets_[{r, s}].insert(t);
                targets_[{s, r}].insert(t);
            }
        }
    }
}

const std::set<int>& BlockTable::targets(int r, int s) const {
    auto it = targets_.find({r, s});
    return it == targets_.end() ? empty_ : it->second;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
    ValidationReport report;
    const int n = static_cast<int>(spec.dim());

    // Jacobi: {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} = 0
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                std::vector<Scalar> acc(n, Scalar(0));
                auto add_cycle = [&](int a, int b, int c) {
                    for (const auto& [m, cm] : spec.bracket_coords(b, c))
                        for (const auto& [l, cl] : spec.bracket_coords(a, m))
                            acc[l] += cm * cl;
                };
                add_cycle(i, j, k);
                add_cycle(j, k, i);
                add_cycle(k, i, j);
                for (int l = 0; l < n; ++l) {
                    if (!acc[l].is_zero()) {
                        report.violations.push_back(
                            "jacobi fails on (" + spec.basis()[i] + "," + spec.basis()[j] + "," +
                            spec.basis()[k] + "): coordinate " + spec.basis()[l] + " residue " +
                            acc[l].str());
                    }
                }
            }
        }
    }

    for (const auto& [name, indices] : spec.subalgebras()) {
        std::set<int> member(indices.begin(), indices.end());
        for (int i : indices) {
            for (int j : indices) {
                if (i >= j) continue;
                for (const auto& [k, c] : spec.bracket_coords(i, j)) {
                    if (!c.is_zero() && !member.count(k)) {
                        report.violations.push_back("subalgebra " + name + " not closed: {" +
                                                    spec.basis()[i] + "," + spec.basis()[j] +
                                                    "} meets " + spec.basis()[k]);
                    }
                }
            }
        }
    }

    if (!spec.blocks().empty()) {
        // set_blocks already guarantees a partition; re-check size bookkeeping
        size_t covered = 0;
        for (const auto& b : spec.blocks()) covered += b.size();
        if (covered != spec.dim())
            report.violations.push_back("blocks do not partition the basis");
    }
    return report;
}

namespace {

// decompose a traceless diagonal matrix over the H_i = E_ii - E_{i+1,i+1}
std::vector<Scalar> cartan_coords(const std::vector<Scalar>& diag) {
    // coefficient on H_i is d_1 + ... + d_i
    std::vector<Scalar> out(diag.size() - 1, Scalar(0));
    Scalar run(0);
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        run += diag[i];
        out[i] = run;
    }
    return out;
}

} // namespace

LieAlgebraSpec make_sl(int nplus1) {
    if (nplus1 < 2) throw lie_error("make_sl requires n+1 >= 2");
    const int N = nplus1;
    const int n = N - 1;

    auto ename = [N](int r, int c) {
        std::string sep = (N > 9) ? "_" : "";
        return "e" + std::to_string(r) + sep + std::to_string(c);
    };
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> offdiag;  // (row, col) per e-coordinate
    for (int i = 1; i <= n; ++i) names.push_back("h" + std::to_string(i));
    // positives e_{i,i+a} row-major, negatives e_{i+a,i} column-major
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            names.push_back(ename(i, j));
            offdiag.emplace_back(i, j);
        }
    for (int j = 1; j <= N; ++j)
        for (int i = j + 1; i <= N; ++i) {
            names.push_back(ename(i, j));
            offdiag.emplace_back(i, j);
        }

    LieAlgebraSpec spec("sl" + std::to_string(N), names);

    auto coord_of = [&](int r, int c) {
        for (size_t k = 0; k < offdiag.size(); ++k)
            if (offdiag[k].first == r && offdiag[k].second == c) return n + static_cast<int>(k);
        throw lie_error("internal: off-diagonal lookup failed");
    };

    // represent basis vectors as integer matrices and bracket exactly
    auto matrix_of = [&](int idx) {
        std::vector<std::vector<long>> m(N, std::vector<long>(N, 0));
        if (idx < n) {
            m[idx][idx] = 1;
            m[idx + 1][idx + 1] = -1;
        } else {
            auto [r, c] = offdiag[idx - n];
            m[r - 1][c - 1] = 1;
        }
        return m;
    };
    auto commute = [&](const auto& A, const auto& B) {
        std::vector<std::vector<long>> m(N, std::vector<long>(N, 0));
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                long v = 0;
                for (int k = 0; k < N; ++k) v += A[r][k] * B[k][c] - B[r][k] * A[k][c];
                m[r][c] = v;
            }
        return m;
    };

    const int dim = n + static_cast<int>(offdiag.size());
    for (int i = 0; i < dim; ++i) {
        auto A = matrix_of(i);
        for (int j = i + 1; j < dim; ++j) {
            auto C = commute(A, matrix_of(j));
            std::vector<Scalar> diag(N, Scalar(0));
            for (int r = 0; r < N; ++r) diag[r] = Scalar(C[r][r]);
            auto hcoords = cartan_coords(diag);
            for (int k = 0; k < n; ++k)
                if (!hcoords[k].is_zero()) spec.set_bracket_term(i, j, k, hcoords[k]);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c)
                    if (r != c && C[r][c] != 0)
                        spec.set_bracket_term(i, j, coord_of(r + 1, c + 1), Scalar(C[r][c]));
        }
    }

    std::vector<int> cartan, positive, negative;
    for (int i = 0; i < n; ++i) cartan.push_back(i);
    for (size_t k = 0; k < offdiag.size(); ++k) {
        int idx = n + static_cast<int>(k);
        if (offdiag[k].first < offdiag[k].second) positive.push_back(idx);
        else negative.push_back(idx);
    }
    spec.set_blocks({cartan, positive, negative});
    spec.add_subalgebra("cartan", cartan);
    spec.add_subalgebra("positive", positive);
    if (N == 3) spec.add_subalgebra("o3", positive);
    return spec;
}

LieAlgebraSpec make_su3_elliott() {
    std::vector<std::string> names{"l0", "lp1", "lm1", "j0", "jp1", "jm1", "jp2", "jm2"};
    LieAlgebraSpec spec("su3-elliott", names);

    const int L0 = 0, LP = 1, LM = 2, J0 = 3, JP1 = 4, JM1 = 5, JP2 = 6, JM2 = 7;
    auto S = [](const char* s) { return Scalar::parse(s); };

    // upper triangle of the commutator table
    spec.set_bracket_term(L0, LP, LP, S("1"));
    spec.set_bracket_term(L0, LM, LM, S("-1"));
    spec.set_bracket_term(L0, JP1, JP1, S("1"));
    spec.set_bracket_term(L0, JM1, JM1, S("-1"));
    spec.set_bracket_term(L0, JP2, JP2, S("2"));
    spec.set_bracket_term(L0, JM2, JM2, S("-2"));

    spec.set_bracket_term(LP, LM, L0, S("-1"));
    spec.set_bracket_term(LP, J0, JP1, S("-3/4*r3"));
    spec.set_bracket_term(LP, JP1, JP2, S("-2*r2"));
    spec.set_bracket_term(LP, JM1, J0, S("-4/3*r3"));
    spec.set_bracket_term(LP, JM2, JM1, S("-1/2*r2"));

    spec.set_bracket_term(LM, J0, JM1, S("3/4*r3"));
    spec.set_bracket_term(LM, JP1, J0, S("4/3*r3"));
    spec.set_bracket_term(LM, JM1, JM2, S("2*r2"));
    spec.set_bracket_term(LM, JP2, JP1, S("1/2*r2"));

    spec.set_bracket_term(J0, JP1, LP, S("3/2*r3"));
    spec.set_bracket_term(J0, JM1, LM, S("-3/2*r3"));

    spec.set_bracket_term(JP1, JM1, L0, S("-2"));
    spec.set_bracket_term(JP1, JM2, LM, S("1*r2"));

    spec.set_bracket_term(JM1, JP2, LP, S("-1*r2"));

    spec.set_bracket_term(JP2, JM2, L0, S("1"));

    spec.set_blocks({{L0, LP, LM}, {J0, JP1, JM1, JP2, JM2}});
    spec.add_subalgebra("so3", {L0, LP, LM});
    return spec;
}

LieAlgebraSpec make_builtin(const std::string& name) {
    if (name == "su3-elliott") return make_su3_elliott();
    if (name.rfind("sl", 0) == 0) {
        int k = std::stoi(name.substr(2));
        return make_sl(k);
    }
    throw lie_error("unknown builtin algebra: " + name);
}

LieAlgebraSpec spec_from_json_text(const std::string& text) {
    json j = json::parse(text);
    LieAlgebraSpec spec(j.at("name").get<std::string>(),
                        j.at("basis").get<std::vector<std::string>>());
    for (const auto& entry : j.at("structure")) {
        int i = spec.index_of(entry.at("i").get<std::string>());
        int jj = spec.index_of(entry.at("j").get<std::string>());
        int k = spec.index_of(entry.at("k").get<std::string>());
        if (i < 0 || jj < 0 || k < 0) throw lie_error("structure entry names unknown coordinate");
        if (i >= jj) throw lie_error("structure entries must have i < j in basis order");
        spec.set_bracket_term(i, jj, k, Scalar::parse(entry.at("c").get<std::string>()));
    }
    if (j.contains("subalgebras")) {
        for (auto it = j["subalgebras"].begin(); it != j["subalgebras"].end(); ++it) {
            std::vector<int> idx;
            for (const auto& nm : it.value()) {
                int i = spec.index_of(nm.get<std::string>());
                if (i < 0) throw lie_error("subalgebra names unknown coordinate");
                idx.push_back(i);
            }
            spec.add_subalgebra(it.key(), idx);
        }
    }
    if (j.contains("blocks")) {
        std::vector<std::vector<int>> blocks;
        for (const auto& blk : j["blocks"]) {
            std::vector<int> idx;
            for (const auto& nm : blk) {
                int i = spec.index_of(nm.get<std::string>());
                if (i < 0) throw lie_error("block names unknown coordinate");
                idx.push_back(i);
            }
            blocks.push_back(std::move(idx));
        }
        spec.set_blocks(std::move(blocks));
    }
    return spec;
}

std::string spec_to_json_text(const LieAlgebraSpec& spec) {
    json j;
    j["name"] = spec.name();
    j["basis"] = spec.basis();
    json structure = json::array();
    for (size_t i = 0; i < spec.dim(); ++i) {
        for (size_t k = i + 1; k < spec.dim(); ++k) {
            for (const auto& [t, c] : spec.bracket_coords(static_cast<int>(i), static_cast<int>(k))) {
                structure.push_back({{"i", spec.basis()[i]},
                                     {"j", spec.basis()[k]},
                                     {"k", spec.basis()[t]},
                                     {"c", c.str()}});
            }
        }
    }
    j["structure"] = structure;
    json subs = json::object();
    for (const auto& [name, idx] : spec.subalgebras()) {
        json arr = json::array();
        for (int i : idx) arr.push_back(spec.basis()[i]);
        subs[name] = arr;
    }
    j["subalgebras"] = subs;
    json blocks = json::array();
    for (const auto& blk : spec.blocks()) {
        json arr = json::array();
        for (int i : blk) arr.push_back(spec.basis()[i]);
        blocks.push_back(arr);
    }
    j["blocks"] = blocks;
    return j.dump(2);
}

Polynomial polynomial_from_json_text(const std::string& text, size_t dim) {
    json j = json::parse(text);
    Polynomial p(dim);
    for (const auto& term : j) {
        auto exps = term.at(0).get<std::vector<int>>();
        if (exps.size() != dim) throw poly_error("polynomial term has wrong dimension");
        Monomial m(dim);
        for (size_t i = 0; i < dim; ++i) {
            if (exps[i] < 0) throw poly_error("negative exponent");
            m.exps[i] = static_cast<uint16_t>(exps[i]);
        }
        p.add_term(m, Scalar::parse(term.at(1).get<std::string>()));
    }
    return p;
}

std::string polynomial_to_json_text(const Polynomial& p) {
    json j = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (auto e : m.exps) exps.push_back(static_cast<int>(e));
        j.push_back(json::array({exps, c.str()}));
    }
    return j.dump();
}

} // namespace pcalg
