#include "facering/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace facering {

SimplicialComplex read_complex(std::istream& in) {
  std::vector<VertexSet> facets;
  VertexSet ground;
  bool ground_given = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "ground") {
      ground_given = true;
      long long v;
      while (ss >> v) {
        if (v <= 0)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": ground vertex ids must be positive");
        ground.insert(static_cast<int>(v));
      }
      continue;
    }
    VertexSet f;
    std::istringstream fs(line);
    long long v;
    while (fs >> v) {
      if (v <= 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": vertex ids must be positive, got " + std::to_string(v));
      f.insert(static_cast<int>(v));
    }
    if (fs.fail() && !fs.eof())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected integers");
    facets.push_back(std::move(f));
  }
  if (!ground_given) return SimplicialComplex::from_facets(std::move(facets));
  VertexSet supp;
  for (const auto& f : facets) supp = supp.unite(f);
  return SimplicialComplex::from_facets(std::move(facets), supp.unite(ground));
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
  if (!c.is_void() && c.facets().size() == 1 && c.facets()[0].empty())
    throw std::invalid_argument("the {∅} complex has no text representation");
  VertexSet ghosts = c.ground_set().minus(c.support());
  if (!ghosts.empty()) {
    out << "ground";
    for (int v : c.ground_set()) out << ' ' << v;
    out << '\n';
  }
  for (const auto& f : c.facets()) {
    bool first = true;
    for (int v : f) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

void write_complex_file(const std::string& path, const SimplicialComplex& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_complex(out, c);
}

}  // namespace facering
