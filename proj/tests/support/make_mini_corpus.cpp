// Regenerates the bundled mini corpus under data/mini_corpus. The files
// are checked in; rerun this only when the generator set changes.
#include <filesystem>
#include <iostream>

#include "bidi/adversarial.hpp"
#include "bidi/graph.hpp"
#include "synthetic.hpp"

using namespace bidi;

int main(int argc, char** argv) {
    std::filesystem::path out = argc > 1 ? argv[1] : "data/mini_corpus";
    std::filesystem::create_directories(out);

    auto emit = [&](const char* name, const Graph& g) {
        write_edge_list(g, (out / name).string());
        std::cout << name << ": n=" << g.n() << " m=" << g.m() << '\n';
    };

    // grid/path-like
    emit("path_300.el", synth::path(300));
    emit("cycle_300.el", synth::cycle(300));
    emit("grid_20x20.el", synth::grid(20, 20));
    // expander-like
    emit("gnm_400_1600.el", synth::gnm_connected(400, 1600, 101));
    emit("gnm_600_2400.el", synth::gnm_connected(600, 2400, 202));
    emit("gnm_800_4000.el", synth::gnm_connected(800, 4000, 303));
    // assorted shapes to keep the pipeline honest
    emit("star_150.el", synth::star(150));
    emit("btree_1023.el", synth::complete_binary_tree(9));
    emit("wheel_120.el", synth::wheel(120));
    emit("ladder_150.el", synth::grid(2, 75));
    return 0;
}
