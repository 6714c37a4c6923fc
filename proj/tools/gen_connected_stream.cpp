// Writes exhaustive streams of connected graphs (one canonical graph6 line
// per isomorphism class). Either one stream to stdout (--n) or fixture
// files connected_n<K>.g6 for K = 1..N (--max-n, --out-dir). Known class
// counts for n = 1..8: 1, 1, 2, 6, 21, 112, 853, 11117.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "connected_stream.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exhaustive connected-graph streams in graph6"};
    int n = 0, max_n = 0;
    std::string out_dir = ".";
    app.add_option("--n", n, "emit connected graphs on exactly n vertices to stdout");
    app.add_option("--max-n", max_n, "write connected_n<K>.g6 for K = 1..max-n");
    app.add_option("--out-dir", out_dir, "directory for --max-n output (default .)");
    CLI11_PARSE(app, argc, argv);

    if ((n > 0) == (max_n > 0)) {
        std::cerr << "error: pass exactly one of --n or --max-n\n";
        return 2;
    }
    try {
        if (n > 0) {
            for (const std::string& line : stemtree::connstream::connected_graphs(n))
                std::cout << line << "\n";
            return 0;
        }
        for (int k = 1; k <= max_n; ++k) {
            auto lines = stemtree::connstream::connected_graphs(k);
            std::string path = out_dir + "/connected_n" + std::to_string(k) + ".g6";
            std::ofstream f(path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open " << path << "\n";
                return 2;
            }
            for (const std::string& line : lines) f << line << "\n";
            std::cerr << "n=" << k << ": " << lines.size() << " graphs -> " << path << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
