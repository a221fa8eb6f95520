#pragma once

// Cellular structure of the L x L periodic square lattice and its dual:
// chains with Z2 coefficients, boundary maps, homology representatives,
// and the intersection pairing between primal and dual 1-chains.
//
// Cell enumeration (both layers):
//   vertices  v = y*L + x                    (row-major)
//   edges     e = 2*(y*L + x) + dir          (dir 0: +x "horizontal", dir 1: +y "vertical")
//   faces     p = y*L + x                    (square with lower-left corner (x,y))
// Dual layer: dual vertex (x,y) sits at the center of primal face (x,y);
// dual edge h*(x,y) crosses primal v(x+1,y), dual edge v*(x,y) crosses
// primal h(x,y+1); dual face (x,y) is centered on primal vertex (x+1,y+1).
//
// Orientation convention: every edge of either layer points +x or +y.
// Signed crossings: I(h, v*) = +1 and I(v, h*) = -1 (right-hand rule).
// Only parities enter the spectral statements; signed values feed the
// twisted Hamiltonians, where coboundaries carry per-edge orientation
// signs from counterclockwise traversal of dual faces.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2lab {

enum class Layer { Primal, Dual };

struct Lattice {
    int L = 0;

    explicit Lattice(int L_) : L(L_) {
        if (L < 2 || L % 2 != 0) throw std::invalid_argument("lattice size must be even and >= 2");
    }

    int n_vertices() const { return L * L; }
    int n_edges() const { return 2 * L * L; }
    int n_faces() const { return L * L; }
    bool multiple_of_four() const { return L % 4 == 0; }

    int wrap(int c) const { return ((c % L) + L) % L; }
    int vertex_index(int x, int y) const { return wrap(y) * L + wrap(x); }
    int edge_index(int x, int y, int dir) const { return 2 * vertex_index(x, y) + dir; }
    int face_index(int x, int y) const { return vertex_index(x, y); }
};

struct Cell {
    int dim = 0;
    Layer layer = Layer::Primal;
    int x = 0, y = 0;
    int dir = 0;  // edges only: 0 horizontal (+x), 1 vertical (+y)
};

// Fixed-size bit vector over a documented cell enumeration; addition is
// symmetric difference, so chain arithmetic is word-wise XOR.
class Chain {
  public:
    Chain(Lattice lat, int dim, Layer layer);

    const Lattice& lattice() const { return lat_; }
    int dim() const { return dim_; }
    Layer layer() const { return layer_; }

    int n_cells() const { return dim_ == 1 ? lat_.n_edges() : lat_.n_vertices(); }

    void toggle(int cell_index);
    void set(int cell_index, bool on);
    bool contains(int cell_index) const;

    void toggle_vertex(int x, int y);
    void toggle_edge(int x, int y, int dir);
    void toggle_face(int x, int y);

    Chain& operator+=(const Chain& other);  // Z2 addition
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    bool operator==(const Chain& other) const;

    bool empty() const;
    int size() const;
    std::vector<Cell> cells() const;
    const std::vector<std::uint64_t>& words() const { return bits_; }

    std::string to_json() const;
    static Chain from_json(const std::string& text);

  private:
    Lattice lat_;
    int dim_;
    Layer layer_;
    std::vector<std::uint64_t> bits_;
};

Chain boundary(const Chain& c);

bool is_cycle(const Chain& c);

// Deterministic GF(2) elimination on the face-edge incidence matrix;
// returns the 2-chain witness when c is a boundary.
std::optional<Chain> boundary_witness(const Chain& c);
bool is_boundary(const Chain& c);

// Winding parities measured by the wrap-around cuts (edge column x = L-1
// for direction 1, edge row y = L-1 for direction 2). (0,0) iff boundary.
std::pair<int, int> homology_class(const Chain& c);

// Crossing bijection between layers (see header comment).
int primal_edge_crossed_by_dual(const Lattice& lat, int x, int y, int dir);
int dual_edge_crossing_primal(const Lattice& lat, int x, int y, int dir);

// Signed intersection number of a primal 1-chain with a dual 1-chain,
// both carrying the canonical (+x/+y) orientation on every edge.
int intersection_number(const Chain& c, const Chain& c_star);
int intersection_parity(const Chain& c, const Chain& c_star);

// Dual 1-chain with integer coefficients in {-1, 0, +1}: the support of a
// twist, with orientation signs relative to the canonical edge directions.
struct SignedDualChain {
    Lattice lat;
    std::vector<std::int8_t> coeff;  // indexed like dual edges

    explicit SignedDualChain(Lattice lat_) : lat(lat_), coeff(lat.n_edges(), 0) {}
    Chain support() const;
};

// Boundary of the dual faces sitting on the vertex set, each face traversed
// counterclockwise; shared edges cancel exactly.
SignedDualChain oriented_coboundary(const Lattice& lat, const std::vector<int>& vertices);

// Canonical cocycle of either homology generator, all coefficients +1:
// C2* = { v*(L-1, y) } crosses the horizontal wrap column (threads the a-holonomy),
// C1* = { h*(x, L-1) } crosses the vertical wrap row (threads the b-holonomy).
SignedDualChain cocycle_c1_star(const Lattice& lat);
SignedDualChain cocycle_c2_star(const Lattice& lat);

// Canonical homology generators: C1 = row-0 horizontal cycle, C2 = column-0
// vertical cycle; the (a,b) holonomy labels are measured along these.
Chain cycle_c1(const Lattice& lat);
Chain cycle_c2(const Lattice& lat);

}  // namespace z2lab
