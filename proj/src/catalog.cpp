#include "catalog.hpp"

#include <fstream>
#include <sstream>

namespace bqf {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<Catalog> Catalog::open(const std::string& data_dir, std::string* err) {
    Catalog c;
    c.dir_ = data_dir;
    auto text = read_file(data_dir + "/index.txt");
    if (!text) {
        if (err) *err = "cannot read " + data_dir + "/index.txt";
        return std::nullopt;
    }
    std::stringstream ss(*text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        std::string name, path;
        if (!(ls >> name)) continue;
        if (!(ls >> path)) {
            if (err) *err = "index entry '" + name + "' has no path";
            return std::nullopt;
        }
        c.entries_.push_back({name, path});
    }
    return c;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

bool Catalog::has(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

std::optional<LinkDiagram> Catalog::load(const std::string& name, std::string* err) const {
    for (const auto& e : entries_) {
        if (e.name != name) continue;
        auto text = read_file(dir_ + "/" + e.path);
        if (!text) {
            if (err) *err = "cannot read " + dir_ + "/" + e.path;
            return std::nullopt;
        }
        return parse_diagram(*text, err);
    }
    if (err) *err = "no catalog entry named '" + name + "'";
    return std::nullopt;
}

}  // namespace bqf
