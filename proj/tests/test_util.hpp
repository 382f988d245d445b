#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing_util {

inline std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string corpus_path(const std::string &name) { return std::string(HORNFB_CORPUS) + "/" + name; }

inline std::string read_corpus(const std::string &name) { return read_file(corpus_path(name)); }

inline std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (auto &e : std::filesystem::directory_iterator(HORNFB_CORPUS))
        if (e.path().extension() == ".chc")
            out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testing_util
