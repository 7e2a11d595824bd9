// Named diagram catalog backed by a data directory with an index file.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace bqf {

struct CatalogEntry {
    std::string name;
    std::string path;  // relative to the data directory
};

class Catalog {
  public:
    // Reads <data_dir>/index.txt ("name path" per line, '#' comments).
    static std::optional<Catalog> open(const std::string& data_dir, std::string* err = nullptr);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::vector<std::string> names() const;
    bool has(const std::string& name) const;
    std::optional<LinkDiagram> load(const std::string& name, std::string* err = nullptr) const;

  private:
    std::string dir_;
    std::vector<CatalogEntry> entries_;
};

std::optional<std::string> read_file(const std::string& path);

}  // namespace bqf
