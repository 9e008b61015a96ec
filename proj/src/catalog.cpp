#include "loopkit/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "loopkit/io.hpp"
#include "parallel.hpp"

namespace loopkit {

namespace {

struct Enumerator {
  int n;
  std::vector<int> cells;
  std::vector<unsigned> row_used;
  std::vector<unsigned> col_used;
  const std::function<void(const Loop&)>& visit;

  void fill(int pos) {
    if (pos == n * n) {
      visit(Loop::from_cells(n, cells));
      return;
    }
    const int r = pos / n;
    const int c = pos % n;
    if (c == 0) {
      place(pos, r);  // first column fixed to natural order
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((row_used[r] >> v & 1u) || (col_used[c] >> v & 1u)) continue;
      place(pos, v);
    }
  }

  void place(int pos, int v) {
    const int r = pos / n;
    const int c = pos % n;
    if ((row_used[r] >> v & 1u) || (col_used[c] >> v & 1u)) return;
    cells[pos] = v;
    row_used[r] |= 1u << v;
    col_used[c] |= 1u << v;
    fill(pos + 1);
    row_used[r] &= ~(1u << v);
    col_used[c] &= ~(1u << v);
  }
};

}  // namespace

void enumerate_loops(int n, const std::function<void(const Loop&)>& visit, int max_order) {
  if (n < 1) throw Error("bad_order", "order must be positive");
  if (n > max_order) throw OrderTooLarge(n, max_order);
  std::vector<int> cells(n * n, -1);
  Enumerator en{n, std::move(cells), std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0),
                visit};
  for (int y = 0; y < n; ++y) {  // first row fixed to natural order
    en.cells[y] = y;
    en.row_used[0] |= 1u << y;
    en.col_used[y] |= 1u << y;
  }
  en.fill(n);
}

std::vector<Loop> enumerate_loops(int n, int max_order) {
  std::vector<Loop> out;
  enumerate_loops(n, [&](const Loop& l) { out.push_back(l); }, max_order);
  return out;
}

namespace {

Loop relabel(const Loop& l, const std::vector<int>& sigma) {
  const int n = l.order();
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      grid[sigma[x]][sigma[y]] = sigma[l.mul(x, y)];
    }
  }
  return Loop::validate(grid);
}

}  // namespace

std::string canonical_key(const Loop& l) {
  const int n = l.order();
  const int e = l.identity();
  std::vector<int> rest;
  for (int x = 0; x < n; ++x) {
    if (x != e) rest.push_back(x);
  }
  std::vector<int> targets(rest.size());
  for (size_t i = 0; i < targets.size(); ++i) targets[i] = static_cast<int>(i) + 1;
  std::vector<int> sigma(n);
  std::string best;
  std::string candidate(n * n, '\0');
  do {
    sigma[e] = 0;
    for (size_t i = 0; i < rest.size(); ++i) sigma[rest[i]] = targets[i];
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        candidate[sigma[x] * n + sigma[y]] = static_cast<char>(sigma[l.mul(x, y)]);
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

Loop normalize(const Loop& l) {
  if (l.identity() == 0) return l;
  std::vector<int> sigma(l.order());
  for (int x = 0; x < l.order(); ++x) sigma[x] = x;
  std::swap(sigma[0], sigma[l.identity()]);
  return relabel(l, sigma);
}

std::vector<CatalogEntry> build_catalog(int n, CatalogFilter filter, int max_order,
                                        int workers) {
  const std::vector<Loop> loops = enumerate_loops(n, max_order);
  std::vector<FlagVector> flags(loops.size());
  std::vector<std::string> keys(loops.size());
  std::vector<char> keep(loops.size(), 1);
  detail::parallel_chunks(static_cast<long>(loops.size()), workers,
                          [&](int, long lo, long hi) {
                            for (long i = lo; i < hi; ++i) {
                              const Loop norm = normalize(loops[i]);
                              flags[i] = classify(norm);
                              if (filter == CatalogFilter::WipOnly && !flags[i].wip) {
                                keep[i] = 0;
                                continue;
                              }
                              if (filter == CatalogFilter::CipOnly && !flags[i].cip) {
                                keep[i] = 0;
                                continue;
                              }
                              keys[i] = canonical_key(norm);
                            }
                          });
  std::map<std::string, CatalogEntry> classes;
  for (size_t i = 0; i < loops.size(); ++i) {
    if (!keep[i]) continue;
    auto it = classes.find(keys[i]);
    if (it == classes.end()) {
      classes.emplace(keys[i],
                      CatalogEntry{normalize(loops[i]), flags[i], keys[i], 0, 1});
    } else {
      if (!(it->second.flags == flags[i])) {
        throw Error("flags_not_invariant",
                    "two loops in one isomorphism class classified differently");
      }
      ++it->second.members;
    }
  }
  std::vector<CatalogEntry> out;
  out.reserve(classes.size());
  int id = 0;
  for (auto& [key, entry] : classes) {
    entry.iso_class_id = id++;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::string entry_file_name(const CatalogEntry& e) {
  std::ostringstream name;
  name << "n" << e.loop.order() << "_c";
  if (e.iso_class_id < 10) name << "00";
  else if (e.iso_class_id < 100) name << "0";
  name << e.iso_class_id << ".loop";
  return name.str();
}

}  // namespace

void write_catalog(const std::vector<CatalogEntry>& entries, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream index(fs::path(dir) / "index.tsv");
  if (!index) throw Error("io", "cannot open " + dir + "/index.tsv for writing");
  index << "# path\torder\tflags(commutative,associative,exponent2,wip,cip,aip,m1)\tclass\n";
  for (const auto& e : entries) {
    const std::string name = entry_file_name(e);
    io::write_loop_file(e.loop, (fs::path(dir) / name).string());
    index << name << '\t' << e.loop.order() << '\t' << e.flags.bits() << '\t'
          << e.iso_class_id << '\n';
  }
}

std::vector<CatalogEntry> read_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream index(fs::path(dir) / "index.tsv");
  if (!index) throw Error("io", "cannot open " + dir + "/index.tsv");
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(index, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string path, order, bits, id;
    if (!std::getline(row, path, '\t') || !std::getline(row, order, '\t') ||
        !std::getline(row, bits, '\t') || !std::getline(row, id, '\t')) {
      throw Error("io", "malformed index line: " + line);
    }
    CatalogEntry e{io::read_loop_file((fs::path(dir) / path).string()),
                   FlagVector::from_bits(bits), "", std::stoi(id), 0};
    e.key = canonical_key(e.loop);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace loopkit
