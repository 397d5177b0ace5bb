#include "mn/protograph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mn {

int BaseMatrix::col_degree(int j) const {
    int d = 0;
    for (int i = 0; i < m0; ++i) d += at(i, j);
    return d;
}

int BaseMatrix::row_degree(int i) const {
    int d = 0;
    for (int j = 0; j < cols; ++j) d += at(i, j);
    return d;
}

int BaseMatrix::max_entry() const { return b.empty() ? 0 : *std::max_element(b.begin(), b.end()); }

int BaseMatrix::total_edges() const { return std::accumulate(b.begin(), b.end(), 0); }

BaseMatrix BaseMatrix::parse(std::istream& in) {
    BaseMatrix m;
    std::string line;
    // skip comments and blank lines
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            auto pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos || out[pos] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line(line)) throw std::runtime_error("base matrix: empty input");
    std::istringstream hdr(line);
    if (!(hdr >> m.m0 >> m.cols >> m.h0))
        throw std::runtime_error("base matrix: bad header (want: m0 n0_total h0)");
    if (m.m0 <= 0 || m.cols <= 0 || m.h0 <= 0 || m.h0 >= m.cols)
        throw std::runtime_error("base matrix: invalid dimensions");
    m.b.resize(std::size_t(m.m0) * m.cols);
    for (int i = 0; i < m.m0; ++i) {
        if (!next_data_line(line)) throw std::runtime_error("base matrix: missing row");
        std::istringstream row(line);
        for (int j = 0; j < m.cols; ++j) {
            if (!(row >> m.at(i, j))) throw std::runtime_error("base matrix: short row");
            if (m.at(i, j) < 0) throw std::runtime_error("base matrix: negative entry");
        }
    }
    return m;
}

BaseMatrix BaseMatrix::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open base matrix file: " + path);
    return parse(in);
}

void BaseMatrix::print(std::ostream& out) const {
    out << m0 << ' ' << cols << ' ' << h0 << '\n';
    for (int i = 0; i < m0; ++i) {
        for (int j = 0; j < cols; ++j) out << at(i, j) << (j + 1 == cols ? '\n' : ' ');
    }
}

std::string BaseMatrix::to_string() const {
    std::ostringstream out;
    print(out);
    return out.str();
}

BaseMatrix BaseMatrix::preset(std::string_view name) {
    BaseMatrix m;
    if (name == "b12") {
        m.m0 = 4;
        m.cols = 6;
        m.h0 = 2;
        m.b = {1, 0, 1, 1, 0, 0,
               0, 1, 0, 3, 0, 1,
               2, 0, 1, 1, 1, 0,
               1, 2, 1, 2, 0, 0};
    } else if (name == "b23") {
        m.m0 = 3;
        m.cols = 5;
        m.h0 = 2;
        m.b = {1, 0, 0, 3, 1,
               1, 1, 0, 3, 0,
               1, 2, 2, 1, 0};
    } else {
        throw std::invalid_argument("unknown preset: " + std::string(name));
    }
    return m;
}

std::vector<std::string> validate(const BaseMatrix& base, int max_parallel_edges) {
    std::vector<std::string> v;
    if (base.m0 <= 0 || base.cols <= 0) {
        v.push_back("empty matrix");
        return v;
    }
    if (base.h0 < 1) v.push_back("h0 must be >= 1");
    if (base.n0() < 1) v.push_back("n0 must be >= 1");
    if (base.m0 != base.n0())
        v.push_back("H2 part must be square (m0 = " + std::to_string(base.m0) +
                    ", n0 = " + std::to_string(base.n0()) + ")");
    for (int i = 0; i < base.m0; ++i)
        for (int j = 0; j < base.cols; ++j)
            if (base.at(i, j) > max_parallel_edges)
                v.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") exceeds max parallel edges");
    for (int j = 0; j < base.cols; ++j)
        if (base.col_degree(j) == 0) v.push_back("all-zero column " + std::to_string(j));
    for (int i = 0; i < base.m0; ++i)
        if (base.row_degree(i) < 2) v.push_back("row " + std::to_string(i) + " has degree < 2");
    return v;
}

namespace {

// Lifted Tanner graph under construction. VN (j,r) = j*ell + r,
// CN (i,q) = i*ell + q; adjacency grows one circulant at a time.
struct LiftGraph {
    int ell, cols, m0;
    std::vector<std::vector<int>> vn_adj;  // VN -> CNs
    std::vector<std::vector<int>> cn_adj;  // CN -> VNs

    LiftGraph(int ell_, int cols_, int m0_)
        : ell(ell_), cols(cols_), m0(m0_),
          vn_adj(std::size_t(cols_) * ell_), cn_adj(std::size_t(m0_) * ell_) {}

    void add_circulant(int i, int j, int s) {
        for (int r = 0; r < ell; ++r) {
            int vn = j * ell + r;
            int cn = i * ell + (r + s) % ell;
            vn_adj[vn].push_back(cn);
            cn_adj[cn].push_back(vn);
        }
    }

    // BFS distances (in edges) from a VN to every CN.
    std::vector<int> cn_distances(int src_vn) const {
        std::vector<int> dv(vn_adj.size(), -1), dc(cn_adj.size(), -1);
        std::queue<int> q;  // encode: vn as +idx+1, cn as -(idx+1)
        dv[src_vn] = 0;
        q.push(src_vn + 1);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            if (t > 0) {
                int vn = t - 1;
                for (int cn : vn_adj[vn])
                    if (dc[cn] < 0) {
                        dc[cn] = dv[vn] + 1;
                        q.push(-(cn + 1));
                    }
            } else {
                int cn = -t - 1;
                for (int vn : cn_adj[cn])
                    if (dv[vn] < 0) {
                        dv[vn] = dc[cn] + 1;
                        q.push(vn + 1);
                    }
            }
        }
        return dc;
    }
};

// One full greedy pass; returns shift table or nullopt if H2 singular.
struct LiftAttempt {
    std::vector<std::vector<int>> shifts;
    BitMatrix h1, h2;
};

std::optional<LiftAttempt> try_lift(const BaseMatrix& base, int ell, uint64_t seed) {
    const int cols = base.cols, m0 = base.m0, h0 = base.h0;
    std::mt19937_64 rng(seed);
    LiftGraph g(ell, cols, m0);
    std::vector<std::vector<int>> shifts(std::size_t(m0) * cols);

    // VN types by descending total degree, then column index.
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return base.col_degree(a) > base.col_degree(b);
    });

    std::vector<int> candidates;
    for (int j : order) {
        for (int i = 0; i < m0; ++i) {
            int mult = base.at(i, j);
            if (mult == 0) continue;
            auto& used = shifts[std::size_t(i) * cols + j];
            for (int k = 0; k < mult; ++k) {
                auto dc = g.cn_distances(j * ell + 0);
                // candidate shift s connects (j,0) to CN (i,s); cycle length
                // through the new edge is dist+1, unreachable means no cycle.
                long best = -1;
                candidates.clear();
                for (int s = 0; s < ell; ++s) {
                    if (std::find(used.begin(), used.end(), s) != used.end()) continue;
                    int d = dc[i * ell + s];
                    long girth_here = (d < 0) ? std::numeric_limits<long>::max() : d + 1;
                    if (girth_here > best) {
                        best = girth_here;
                        candidates.clear();
                    }
                    if (girth_here == best) candidates.push_back(s);
                }
                int s = candidates.size() == 1
                            ? candidates.front()
                            : candidates[std::uniform_int_distribution<std::size_t>(
                                  0, candidates.size() - 1)(rng)];
                used.push_back(s);
                g.add_circulant(i, j, s);
            }
            std::sort(used.begin(), used.end());
        }
    }

    const int h = h0 * ell, n = (cols - h0) * ell;
    BitMatrix h1(n, h), h2(n, n);
    for (int i = 0; i < m0; ++i) {
        for (int j = 0; j < cols; ++j) {
            for (int s : shifts[std::size_t(i) * cols + j]) {
                for (int r = 0; r < ell; ++r) {
                    int row = i * ell + (r + s) % ell;
                    if (j < h0)
                        h1.flip(row, j * ell + r);
                    else
                        h2.flip(row, (j - h0) * ell + r);
                }
            }
        }
    }
    if (gf2_rank(h2) != std::size_t(n)) return std::nullopt;
    return LiftAttempt{std::move(shifts), std::move(h1), std::move(h2)};
}

}  // namespace

LiftedCode lift(const BaseMatrix& base, int ell, uint64_t seed) {
    auto violations = validate(base);
    if (!violations.empty())
        throw std::invalid_argument("lift: invalid base matrix: " + violations.front());
    if (ell < 1) throw std::invalid_argument("lift: ell must be >= 1");
    if (base.max_entry() > ell)
        throw UnliftableError("unliftable: parallel edges exceed lifting factor " +
                              std::to_string(ell) + " (distinct shifts impossible)");

    for (int attempt = 0; attempt < 32; ++attempt) {
        uint64_t s = seed + uint64_t(attempt);
        auto a = try_lift(base, ell, s);
        if (!a) continue;
        LiftedCode code;
        code.base = base;
        code.ell = ell;
        code.seed = s;
        code.requested_seed = seed;
        code.shifts = std::move(a->shifts);
        code.h1 = std::move(a->h1);
        code.h2 = std::move(a->h2);
        code.generator = compute_generator(code.h1, code.h2);
        code.girth = tanner_girth(code);
        return code;
    }
    throw UnliftableError("unliftable: H2 singular for 32 consecutive seeds");
}

BitMatrix compute_generator(const BitMatrix& h1, const BitMatrix& h2) {
    auto x = gf2_solve(h2, h1);  // x = H2^-1 H1, n x h
    if (!x) throw std::runtime_error("compute_generator: H2 is singular");
    return gf2_transpose(*x);  // h x n
}

int tanner_girth(const LiftedCode& code) {
    const int ell = code.ell, cols = code.base.cols, m0 = code.base.m0;
    LiftGraph g(ell, cols, m0);
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < cols; ++j)
            for (int s : code.shifts_at(i, j)) g.add_circulant(i, j, s);

    // Every cycle passes through copy 0 of some VN type (circulant symmetry),
    // so BFS from those representatives suffices.
    int nv = cols * ell, nc = m0 * ell;
    int best = kGirthInfinite;
    std::vector<int> dist(nv + nc), branch(nv + nc);
    auto adj = [&](int node) -> const std::vector<int>& {
        return node < nv ? g.vn_adj[node] : g.cn_adj[node - nv];
    };
    auto other = [&](int node, int nb) { return node < nv ? nb + nv : nb; };
    for (int j = 0; j < cols; ++j) {
        int root = j * ell;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(branch.begin(), branch.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (2 * dist[x] >= best) break;
            for (int nb : adj(x)) {
                int y = other(x, nb);
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    branch[y] = (x == root) ? y : branch[x];
                    q.push(y);
                } else if (y == root) {
                    if (dist[x] >= 2) best = std::min(best, dist[x] + 1);
                } else if (x != root && branch[y] != branch[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

bool syndrome_ok(const LiftedCode& code, const std::vector<uint8_t>& v,
                 const std::vector<uint8_t>& c) {
    const int n = code.n(), h = code.h();
    if (int(v.size()) != h || int(c.size()) != n)
        throw std::invalid_argument("syndrome_ok: size mismatch");
    for (int r = 0; r < n; ++r) {
        int parity = 0;
        for (int j = 0; j < h; ++j)
            if (code.h1.get(r, j)) parity ^= v[j];
        for (int j = 0; j < n; ++j)
            if (code.h2.get(r, j)) parity ^= c[j];
        if (parity) return false;
    }
    return true;
}

void LiftedCode::save(std::ostream& out) const {
    out << "mnlift 1\n";
    out << "# lifting: single-stage circulant\n";
    out << ell << ' ' << base.m0 << ' ' << base.cols << ' ' << base.h0 << ' ' << seed << ' '
        << requested_seed << ' ' << girth << '\n';
    base.print(out);
    for (int i = 0; i < base.m0; ++i) {
        for (int j = 0; j < base.cols; ++j) {
            const auto& s = shifts_at(i, j);
            if (s.empty()) continue;
            out << i << ' ' << j;
            for (int x : s) out << ' ' << x;
            out << '\n';
        }
    }
}

LiftedCode LiftedCode::load(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out2) {
        while (std::getline(in, out2)) {
            auto pos = out2.find_first_not_of(" \t\r");
            if (pos == std::string::npos || out2[pos] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line(line) || line.rfind("mnlift", 0) != 0)
        throw std::runtime_error("lifted code: bad magic");
    LiftedCode code;
    if (!next_data_line(line)) throw std::runtime_error("lifted code: missing header");
    {
        std::istringstream hdr(line);
        int m0, cols, h0;
        if (!(hdr >> code.ell >> m0 >> cols >> h0 >> code.seed >> code.requested_seed >>
              code.girth))
            throw std::runtime_error("lifted code: bad header");
    }
    code.base = BaseMatrix::parse(in);
    code.shifts.assign(std::size_t(code.base.m0) * code.base.cols, {});
    for (int i = 0; i < code.base.m0; ++i) {
        for (int j = 0; j < code.base.cols; ++j) {
            if (code.base.at(i, j) == 0) continue;
            if (!next_data_line(line)) throw std::runtime_error("lifted code: missing shifts");
            std::istringstream row(line);
            int ri, rj;
            if (!(row >> ri >> rj) || ri != i || rj != j)
                throw std::runtime_error("lifted code: shift table out of order");
            auto& s = code.shifts[std::size_t(i) * code.base.cols + j];
            int x;
            while (row >> x) {
                if (x < 0 || x >= code.ell) throw std::runtime_error("lifted code: shift range");
                s.push_back(x);
            }
            if (int(s.size()) != code.base.at(i, j))
                throw std::runtime_error("lifted code: shift count mismatch");
        }
    }
    // Rebuild H1/H2/G from the shift table (bit-exact reconstruction).
    const int ell = code.ell, h0 = code.base.h0, cols = code.base.cols;
    const int h = h0 * ell, n = code.base.n0() * ell;
    code.h1 = BitMatrix(n, h);
    code.h2 = BitMatrix(n, n);
    for (int i = 0; i < code.base.m0; ++i)
        for (int j = 0; j < cols; ++j)
            for (int s : code.shifts_at(i, j))
                for (int r = 0; r < ell; ++r) {
                    int row = i * ell + (r + s) % ell;
                    if (j < h0)
                        code.h1.flip(row, j * ell + r);
                    else
                        code.h2.flip(row, (j - h0) * ell + r);
                }
    code.generator = compute_generator(code.h1, code.h2);
    return code;
}

void LiftedCode::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    save(out);
}

LiftedCode LiftedCode::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lifted code file: " + path);
    return load(in);
}

}  // namespace mn
