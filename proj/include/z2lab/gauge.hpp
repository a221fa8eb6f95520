#pragma once

// Z2 gauge-field configurations on the primal edges: fluxes, holonomies,
// gauge orbits, canonical flux-sector representatives and the two families
// of reference backgrounds (pi-flux and the monopole-superlattice pattern
// used for the monopole mass).

#include <string>
#include <vector>

#include "z2lab/lattice.hpp"

namespace z2lab {

struct GaugeConfig {
    Lattice lat;
    std::vector<std::int8_t> sigma;  // +1/-1 per edge index

    explicit GaugeConfig(Lattice lat_) : lat(lat_), sigma(lat.n_edges(), +1) {}

    int8_t edge(int x, int y, int dir) const { return sigma[lat.edge_index(x, y, dir)]; }
    void set_edge(int x, int y, int dir, int8_t v) { sigma[lat.edge_index(x, y, dir)] = v; }

    std::string to_json() const;  // base64 edge bitstring + L
    static GaugeConfig from_json(const std::string& text);
};

// Flux sector label: plaquette fluxes (product +1) plus the two holonomies
// measured along the canonical cycles C1 and C2.
struct FluxSector {
    Lattice lat;
    std::vector<std::int8_t> flux;  // per face index
    int a = +1;                     // holonomy along C1 (row-0 horizontal cycle)
    int b = +1;                     // holonomy along C2 (column-0 vertical cycle)

    explicit FluxSector(Lattice lat_) : lat(lat_), flux(lat.n_faces(), +1) {}
    bool operator==(const FluxSector& o) const {
        return lat.L == o.lat.L && flux == o.flux && a == o.a && b == o.b;
    }
    int monopole_count() const;  // number of +1 plaquettes (defects on the pi-flux vacuum)
};

int flux(const GaugeConfig& g, int x, int y);
std::vector<std::int8_t> flux_map(const GaugeConfig& g);

// Product of sigma along a primal cycle; rejects open chains.
int holonomy(const GaugeConfig& g, const Chain& c);

// Flips sigma on every edge with exactly one endpoint in the vertex set.
GaugeConfig gauge_transform(const GaugeConfig& g, const std::vector<int>& vertices);

FluxSector classify(const GaugeConfig& g);

// Deterministic tree-gauge representative: sigma = +1 on the comb spanning
// tree (non-wrapping horizontals plus column-0 non-wrapping verticals); the
// remaining edges are fixed by the fluxes and holonomies.
GaugeConfig canonical_rep(const FluxSector& s);

// All plaquettes -1, holonomies (a,b): every second row of horizontal edges
// is -1; a = -1 additionally flips the wrap column h(L-1, .), b = -1 the
// wrap row v(., L-1).
GaugeConfig pi_flux_background(const Lattice& lat, int a, int b);

// The pi-flux pattern with a superlattice of +1 plaquettes (monopoles) at
// even x, odd y -- L^2/4 of them; requires L in 4N (the cell tiles 4x2).
GaugeConfig chessboard_background(const Lattice& lat, int a, int b);

// CSV dump of the flux map (columns x, y, flux), for plotting.
std::string flux_map_csv(const GaugeConfig& g);

}  // namespace z2lab
