#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mn/f2.hpp"

namespace mn {

/// Integer base matrix [B1|B2] of a protograph mother code. The first
/// `punctured` columns are the punctured (DM output) VN types; the remaining
/// n0 columns are transmitted. B2 is square (m0 == n0).
struct BaseMatrix {
    int m0 = 0;         // CN types (rows)
    int cols = 0;       // n0_total = h0 + n0
    int h0 = 0;         // punctured VN-type columns (leading)
    std::vector<int> b; // m0*cols, row-major

    int n0() const { return cols - h0; }
    int& at(int i, int j) { return b[std::size_t(i) * cols + j]; }
    int at(int i, int j) const { return b[std::size_t(i) * cols + j]; }

    int col_degree(int j) const;
    int row_degree(int i) const;
    int max_entry() const;
    int total_edges() const;

    double inner_rate() const { return double(h0) / double(n0()); }   // R_I = h/n
    double mother_rate() const { return double(h0) / double(cols); }  // R_IM = h/(h+n)

    bool operator==(const BaseMatrix&) const = default;

    // Text format: first line "m0 n0_total h0", then m0 rows of integers.
    static BaseMatrix parse(std::istream& in);
    static BaseMatrix load(const std::string& path);
    void print(std::ostream& out) const;
    std::string to_string() const;

    // Named presets: "b12" (4x6, h0=2) and "b23" (3x5, h0=2).
    static BaseMatrix preset(std::string_view name);
};

inline constexpr int kMaxParallelEdges = 3;
inline constexpr int kGirthInfinite = std::numeric_limits<int>::max();

// Empty iff all BaseMatrix invariants hold. Violations are returned as
// human-readable strings naming the offending row/column.
std::vector<std::string> validate(const BaseMatrix& base,
                                  int max_parallel_edges = kMaxParallelEdges);

struct UnliftableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quasi-cyclic lift of a base matrix. Each base entry (i,j) with value b
/// owns b distinct circulant shifts; the edge (VN j, copy r) -- (CN i, copy
/// (r+s) mod ell) exists for each shift s. Immutable once built.
struct LiftedCode {
    BaseMatrix base;
    int ell = 0;
    uint64_t seed = 0;       // seed that produced the shifts (after retries)
    uint64_t requested_seed = 0;
    int girth = 0;           // achieved girth of [H1|H2], kGirthInfinite if acyclic

    // shifts[i*cols + j] = sorted list of at(i,j) distinct shifts in [0, ell)
    std::vector<std::vector<int>> shifts;

    BitMatrix h1;        // n x h
    BitMatrix h2;        // n x n
    BitMatrix generator; // h x n, c = v * G

    int h() const { return ell * base.h0; }
    int n() const { return ell * base.n0(); }

    const std::vector<int>& shifts_at(int i, int j) const {
        return shifts[std::size_t(i) * base.cols + j];
    }

    // Serialization: header line + shift table; H and G are rebuilt on load.
    void save(std::ostream& out) const;
    static LiftedCode load(std::istream& in);
    void save_file(const std::string& path) const;
    static LiftedCode load_file(const std::string& path);
};

// Greedy circulant PEG lift. Shifts are chosen edge-by-edge maximizing the
// local girth seen from the new edge; ties are broken by a seed-driven draw.
// If H2 comes out singular the lift is retried with an incremented seed, up
// to 32 times; throws UnliftableError when all retries fail or when some
// entry exceeds ell (parallel edges need distinct shifts).
LiftedCode lift(const BaseMatrix& base, int ell, uint64_t seed);

// G (h x n) with c = v*G  <=>  for every CN r: XOR_{j in H2 row r} c_j =
// XOR_{j in H1 row r} v_j. Computed by F2 elimination; throws on singular H2.
BitMatrix compute_generator(const BitMatrix& h1, const BitMatrix& h2);

// Shortest cycle in the Tanner graph of [H1|H2]; kGirthInfinite for forests.
int tanner_girth(const LiftedCode& code);

// Per-CN parity of the full word [v|c] under H = [H1|H2]; true iff zero.
bool syndrome_ok(const LiftedCode& code, const std::vector<uint8_t>& v,
                 const std::vector<uint8_t>& c);

}  // namespace mn
