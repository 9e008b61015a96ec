#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/properties.hpp"

namespace loopkit {

enum class CatalogFilter { All, WipOnly, CipOnly };

struct CatalogEntry {
  Loop loop;              // normalized representative, identity 0
  FlagVector flags;
  std::string key;        // canonical form bytes; equal keys <=> isomorphic
  int iso_class_id = 0;
  int members = 0;        // reduced loops in this class
};

// All reduced Latin squares of order n (first row and column in natural order,
// so the identity is 0), in lexicographic backtracking order.
void enumerate_loops(int n, const std::function<void(const Loop&)>& visit, int max_order = 6);
std::vector<Loop> enumerate_loops(int n, int max_order = 6);

std::string canonical_key(const Loop& l);
Loop normalize(const Loop& l);  // relabel so the identity is 0

std::vector<CatalogEntry> build_catalog(int n, CatalogFilter filter = CatalogFilter::All,
                                        int max_order = 6, int workers = 0);

void write_catalog(const std::vector<CatalogEntry>& entries, const std::string& dir);
std::vector<CatalogEntry> read_catalog(const std::string& dir);

}  // namespace loopkit
