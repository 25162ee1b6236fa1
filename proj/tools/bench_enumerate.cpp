// Compares the serial reference enumeration against the OpenMP kernels.
#include <chrono>
#include <iostream>

#include "ddimer/enumerate.hpp"
#include "ddimer/instances.hpp"

using namespace ddimer;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_zd(const std::string& name, const EmbeddedGraph& g) {
    EnumOptions opts;
    opts.cap = 4'000'000'000LL;

    auto t0 = clock_type::now();
    Rat serial = zd_enumerate_serial(g, opts);
    double ts = seconds_since(t0);

    t0 = clock_type::now();
    Rat parallel = zd_enumerate(g, opts);
    double tp = seconds_since(t0);

    std::cout << name << ": zd serial " << ts << "s, parallel " << tp << "s (x"
              << (tp > 0 ? ts / tp : 0) << "), results "
              << (serial == parallel ? "agree" : "DISAGREE") << "\n";
}

void bench_dd(const std::string& name, const EmbeddedGraph& g) {
    EnumOptions opts;
    opts.cap = 4'000'000'000LL;

    auto t0 = clock_type::now();
    auto serial = all_pairing_sums_serial(g, opts);
    double ts = seconds_since(t0);

    t0 = clock_type::now();
    auto parallel = all_pairing_sums(g, opts);
    double tp = seconds_since(t0);

    std::cout << name << ": dd serial " << ts << "s, parallel " << tp << "s (x"
              << (tp > 0 ? ts / tp : 0) << "), results "
              << (serial == parallel ? "agree" : "DISAGREE") << "\n";
}

}  // namespace

int main() {
    bench_zd("grid 6x8", grid_graph(6, 8, false));
    bench_zd("grid 8x8", grid_graph(8, 8, false));
    bench_dd("grid 4x6, closed", grid_graph(4, 6, false));
    bench_dd("grid 4x7, closed", grid_graph(4, 7, false));
    {
        EmbeddedGraph g = grid_graph(4, 7, false);
        Embedding emb = build_embedding(g);
        std::vector<int> ring = outer_face_ccw(g, emb, 0);
        g.nodes.assign(ring.begin(), ring.begin() + 4);
        long black = 0;
        for (int id : g.nodes)
            if (g.vertex(id).color == Color::Black) ++black;
        if (2 * black == static_cast<long>(g.nodes.size())) bench_dd("grid 4x7, 4 nodes", g);
    }
    return 0;
}
