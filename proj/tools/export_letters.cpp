// Writes every builtin letter to <outdir>/<name>.tgf. The committed files
// under data/letters/ come from this tool; a unit test keeps them in sync.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "topograph/alphabet.hpp"
#include "topograph/tgf.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: export_letters <outdir>\n";
        return 2;
    }
    std::filesystem::path outdir(argv[1]);
    std::filesystem::create_directories(outdir);

    for (const auto& entry : topograph::letter_entries(true)) {
        std::string filename = (entry.name == "Ñ") ? "Ntilde" : entry.name;
        std::ofstream out(outdir / (filename + ".tgf"), std::ios::binary);
        out << "# " << entry.notes << "\n";
        out << topograph::serialize(entry.graph);
    }
    return 0;
}
