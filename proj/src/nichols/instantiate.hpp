#pragma once

#include "nichols/hilbert.hpp"

#include <string>
#include <vector>

namespace nichols {

/// A concrete witness for one of the paper-derived example families: the
/// smallest group quotient and explicit character values (lexicographic on
/// field extension degree, then group order) satisfying the constraints.
struct RepData {
  Elt x;                       // support representative; the module is M(x, tau)
  std::vector<Elt> gens;       // generating set of G^x the values are given on
  std::vector<Matrix> images;  // tau on those generators
};

struct Instantiated {
  std::string id;
  unsigned characteristic = 0;
  std::shared_ptr<const Group> G;
  const Field* K = nullptr;
  RepData v, w;
  PairState pair;
};

/// Example ids: g2a, g2b, g4, t, z32-p1, z32-p2, z32-p5', z31a-p4, z31a-p5,
/// z31a-p5'', z31a-p6, z31b-p3.
const std::vector<std::string>& example_ids();

/// Which characteristics the example's constraints admit.
bool example_admits_char(const std::string& id, unsigned p);

/// Finds the minimal witness (cached).  Throws if no solution exists within
/// the search bounds (each cyclic order <= 12), which would indicate a
/// transcription error in the constraint set.
const Instantiated& instantiate_example(const std::string& id, unsigned characteristic);

/// A witness module for a univariate class row (cached).
const YDModule& yclass_witness(YClassLabel y, unsigned characteristic);

/// Verification rows: the classification table of rank-two Nichols algebras.
struct TableRow {
  int index;                  // 1..16
  int rank;                   // dim V + dim W
  Family family;
  std::string char_condition; // "", "2", "3", "!=2", "!=3", "!=2,3"
  long long dimension;
  std::string support;        // quandle type name
  std::vector<std::string> example_ids; // fixtures verifying this row
};
const std::vector<TableRow>& classification_table();
bool row_applicable(const TableRow& row, unsigned p);

/// Stated Hilbert series of the Gamma_2 / Gamma_4 / T examples (the Gamma_3
/// rows are assembled from root data instead).
HilbertSeries stated_example_series(const std::string& id, unsigned characteristic);

} // namespace nichols
