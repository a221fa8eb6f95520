#include "z2lab/lattice.hpp"

#include <algorithm>
#include <bit>

#include <nlohmann/json.hpp>

namespace z2lab {

Chain::Chain(Lattice lat, int dim, Layer layer) : lat_(lat), dim_(dim), layer_(layer) {
    if (dim < 0 || dim > 2) throw std::invalid_argument("chain dimension must be 0, 1 or 2");
    bits_.assign((static_cast<size_t>(n_cells()) + 63) / 64, 0);
}

void Chain::toggle(int cell_index) { bits_[cell_index / 64] ^= (1ull << (cell_index % 64)); }

void Chain::set(int cell_index, bool on) {
    std::uint64_t mask = 1ull << (cell_index % 64);
    if (on)
        bits_[cell_index / 64] |= mask;
    else
        bits_[cell_index / 64] &= ~mask;
}

bool Chain::contains(int cell_index) const {
    return (bits_[cell_index / 64] >> (cell_index % 64)) & 1ull;
}

void Chain::toggle_vertex(int x, int y) {
    if (dim_ != 0) throw std::invalid_argument("vertex cell in a chain of dimension != 0");
    toggle(lat_.vertex_index(x, y));
}

void Chain::toggle_edge(int x, int y, int dir) {
    if (dim_ != 1) throw std::invalid_argument("edge cell in a chain of dimension != 1");
    toggle(lat_.edge_index(x, y, dir));
}

void Chain::toggle_face(int x, int y) {
    if (dim_ != 2) throw std::invalid_argument("face cell in a chain of dimension != 2");
    toggle(lat_.face_index(x, y));
}

Chain& Chain::operator+=(const Chain& other) {
    if (lat_.L != other.lat_.L || dim_ != other.dim_ || layer_ != other.layer_)
        throw std::invalid_argument("chain addition requires equal lattice, dimension and layer");
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    return *this;
}

bool Chain::operator==(const Chain& other) const {
    return lat_.L == other.lat_.L && dim_ == other.dim_ && layer_ == other.layer_ &&
           bits_ == other.bits_;
}

bool Chain::empty() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

int Chain::size() const {
    int n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

std::vector<Cell> Chain::cells() const {
    std::vector<Cell> out;
    const int L = lat_.L;
    for (int idx = 0; idx < n_cells(); ++idx) {
        if (!contains(idx)) continue;
        Cell c;
        c.dim = dim_;
        c.layer = layer_;
        if (dim_ == 1) {
            c.dir = idx % 2;
            c.x = (idx / 2) % L;
            c.y = (idx / 2) / L;
        } else {
            c.x = idx % L;
            c.y = idx / L;
        }
        out.push_back(c);
    }
    return out;
}

std::string Chain::to_json() const {
    nlohmann::json j;
    j["L"] = lat_.L;
    j["dim"] = dim_;
    j["layer"] = layer_ == Layer::Primal ? "primal" : "dual";
    auto cells_j = nlohmann::json::array();
    for (const Cell& c : cells()) {
        if (dim_ == 1)
            cells_j.push_back({c.x, c.y, c.dir});
        else
            cells_j.push_back({c.x, c.y});
    }
    j["cells"] = cells_j;
    return j.dump();
}

Chain Chain::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Lattice lat(j.at("L").get<int>());
    int dim = j.at("dim").get<int>();
    std::string layer_s = j.at("layer").get<std::string>();
    if (layer_s != "primal" && layer_s != "dual")
        throw std::invalid_argument("chain layer must be 'primal' or 'dual'");
    Chain c(lat, dim, layer_s == "primal" ? Layer::Primal : Layer::Dual);
    for (const auto& cell : j.at("cells")) {
        int x = cell.at(0).get<int>();
        int y = cell.at(1).get<int>();
        if (dim == 1)
            c.toggle_edge(x, y, cell.at(2).get<int>());
        else if (dim == 0)
            c.toggle_vertex(x, y);
        else
            c.toggle_face(x, y);
    }
    return c;
}

Chain boundary(const Chain& c) {
    if (c.dim() == 0) throw std::invalid_argument("no boundary of 0-chain");
    const Lattice& lat = c.lattice();
    Chain out(lat, c.dim() - 1, c.layer());
    if (c.dim() == 2) {
        // Face (x,y) is bounded by h(x,y), h(x,y+1), v(x,y), v(x+1,y); the
        // combinatorics is identical on the dual layer.
        for (const Cell& f : c.cells()) {
            out.toggle(lat.edge_index(f.x, f.y, 0));
            out.toggle(lat.edge_index(f.x, f.y + 1, 0));
            out.toggle(lat.edge_index(f.x, f.y, 1));
            out.toggle(lat.edge_index(f.x + 1, f.y, 1));
        }
    } else {
        for (const Cell& e : c.cells()) {
            out.toggle(lat.vertex_index(e.x, e.y));
            if (e.dir == 0)
                out.toggle(lat.vertex_index(e.x + 1, e.y));
            else
                out.toggle(lat.vertex_index(e.x, e.y + 1));
        }
    }
    return out;
}

bool is_cycle(const Chain& c) { return boundary(c).empty(); }

std::optional<Chain> boundary_witness(const Chain& c) {
    if (c.dim() != 1) throw std::invalid_argument("boundary witness asks for a 1-chain");
    const Lattice& lat = c.lattice();
    const int n_edges = lat.n_edges();
    const int n_faces = lat.n_faces();

    // Incidence columns: boundary of each face as an edge bitset, augmented
    // with a face-index set to track the witness combination.
    const int edge_words = (n_edges + 63) / 64;
    const int face_words = (n_faces + 63) / 64;
    std::vector<std::vector<std::uint64_t>> col(n_faces);
    std::vector<std::vector<std::uint64_t>> comb(n_faces);
    for (int f = 0; f < n_faces; ++f) {
        Chain single(lat, 2, c.layer());
        single.toggle(f);
        Chain b = boundary(single);
        col[f] = b.words();
        comb[f].assign(face_words, 0);
        comb[f][f / 64] = 1ull << (f % 64);
    }

    std::vector<std::uint64_t> rhs = c.words();
    std::vector<std::uint64_t> witness(face_words, 0);

    // Column-pivot elimination: sweep edges in index order, eliminate with
    // the first unused column carrying that edge. Deterministic by design.
    std::vector<bool> used(n_faces, false);
    for (int e = 0; e < n_edges; ++e) {
        const size_t w = e / 64;
        const std::uint64_t mask = 1ull << (e % 64);
        int pivot = -1;
        for (int f = 0; f < n_faces; ++f) {
            if (!used[f] && (col[f][w] & mask)) {
                pivot = f;
                break;
            }
        }
        if (pivot < 0) continue;
        used[pivot] = true;
        for (int f = 0; f < n_faces; ++f) {
            if (f != pivot && (col[f][w] & mask)) {
                for (int k = 0; k < edge_words; ++k) col[f][k] ^= col[pivot][k];
                for (int k = 0; k < face_words; ++k) comb[f][k] ^= comb[pivot][k];
            }
        }
        if (rhs[w] & mask) {
            for (int k = 0; k < edge_words; ++k) rhs[k] ^= col[pivot][k];
            for (int k = 0; k < face_words; ++k) witness[k] ^= comb[pivot][k];
        }
    }
    for (std::uint64_t w : rhs)
        if (w) return std::nullopt;

    Chain lambda(lat, 2, c.layer());
    for (int f = 0; f < n_faces; ++f)
        if ((witness[f / 64] >> (f % 64)) & 1ull) lambda.toggle(f);
    return lambda;
}

bool is_boundary(const Chain& c) { return boundary_witness(c).has_value(); }

std::pair<int, int> homology_class(const Chain& c) {
    if (c.dim() != 1 || !is_cycle(c)) throw std::invalid_argument("homology class of a non-cycle");
    const Lattice& lat = c.lattice();
    int w1 = 0, w2 = 0;
    for (int y = 0; y < lat.L; ++y)
        if (c.contains(lat.edge_index(lat.L - 1, y, 0))) w1 ^= 1;
    for (int x = 0; x < lat.L; ++x)
        if (c.contains(lat.edge_index(x, lat.L - 1, 1))) w2 ^= 1;
    return {w1, w2};
}

int primal_edge_crossed_by_dual(const Lattice& lat, int x, int y, int dir) {
    return dir == 0 ? lat.edge_index(x + 1, y, 1) : lat.edge_index(x, y + 1, 0);
}

int dual_edge_crossing_primal(const Lattice& lat, int x, int y, int dir) {
    return dir == 0 ? lat.edge_index(x, y - 1, 1) : lat.edge_index(x - 1, y, 0);
}

int intersection_number(const Chain& c, const Chain& c_star) {
    if (c.layer() != Layer::Primal || c_star.layer() != Layer::Dual || c.dim() != 1 ||
        c_star.dim() != 1)
        throw std::invalid_argument("intersection number pairs a primal 1-chain with a dual 1-chain");
    const Lattice& lat = c.lattice();
    int total = 0;
    for (const Cell& e : c_star.cells()) {
        int crossed = primal_edge_crossed_by_dual(lat, e.x, e.y, e.dir);
        if (c.contains(crossed)) total += (e.dir == 1) ? +1 : -1;
    }
    return total;
}

int intersection_parity(const Chain& c, const Chain& c_star) {
    return ((intersection_number(c, c_star) % 2) + 2) % 2;
}

Chain SignedDualChain::support() const {
    Chain out(lat, 1, Layer::Dual);
    for (int e = 0; e < lat.n_edges(); ++e)
        if (coeff[e] != 0) out.toggle(e);
    return out;
}

SignedDualChain oriented_coboundary(const Lattice& lat, const std::vector<int>& vertices) {
    SignedDualChain out(lat);
    std::vector<int> acc(lat.n_edges(), 0);
    for (int v : vertices) {
        // Dual face centered on vertex (x,y) is p*(x-1,y-1); counterclockwise
        // traversal: +h*(a,b), +v*(a+1,b), -h*(a,b+1), -v*(a,b).
        int x = v % lat.L, y = v / lat.L;
        int a = x - 1, b = y - 1;
        acc[lat.edge_index(a, b, 0)] += 1;
        acc[lat.edge_index(a + 1, b, 1)] += 1;
        acc[lat.edge_index(a, b + 1, 0)] -= 1;
        acc[lat.edge_index(a, b, 1)] -= 1;
    }
    for (int e = 0; e < lat.n_edges(); ++e) {
        if (acc[e] < -1 || acc[e] > 1)
            throw std::logic_error("coboundary coefficient outside {-1,0,1}");
        out.coeff[e] = static_cast<std::int8_t>(acc[e]);
    }
    return out;
}

SignedDualChain cocycle_c1_star(const Lattice& lat) {
    SignedDualChain out(lat);
    for (int x = 0; x < lat.L; ++x) out.coeff[lat.edge_index(x, lat.L - 1, 0)] = 1;
    return out;
}

SignedDualChain cocycle_c2_star(const Lattice& lat) {
    SignedDualChain out(lat);
    for (int y = 0; y < lat.L; ++y) out.coeff[lat.edge_index(lat.L - 1, y, 1)] = 1;
    return out;
}

Chain cycle_c1(const Lattice& lat) {
    Chain c(lat, 1, Layer::Primal);
    for (int x = 0; x < lat.L; ++x) c.toggle_edge(x, 0, 0);
    return c;
}

Chain cycle_c2(const Lattice& lat) {
    Chain c(lat, 1, Layer::Primal);
    for (int y = 0; y < lat.L; ++y) c.toggle_edge(0, y, 1);
    return c;
}

}  // namespace z2lab
