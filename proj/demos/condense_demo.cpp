// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Walks one small database through the condensation techniques: closed and
// free sets, frequency discretization, greedy pattern ordering and a chain
// partition.

#include <iostream>

#include "patsum/patsum.hpp"

int main() {
  using namespace patsum;

  TransactionDatabase db = parse_fimi("1 2 3\n1 2\n1 2 3 4\n2 3\n");
  RatedCollection frequent = mine_frequent(db, Rat(1, 2));
  std::cout << "frequent itemsets at sigma = 1/2\n" << to_tsv(frequent);

  RatedCollection closed = detect_closed(frequent);
  std::cout << "\nclosed members\n" << to_tsv(closed);

  std::vector<double> frequencies;
  for (const Itemset& x : frequent.itemsets())
    frequencies.push_back(to_double(frequent.frequency(x)));
  Discretization disc = interval_cover(frequencies, 0.2);
  std::cout << "\ndiscretized to " << disc.points.size()
            << " points, closed members after relabeling: "
            << condense_by_discretization(frequent, disc).size() << "\n";

  QualityMap quality;
  for (const Itemset& x : frequent.itemsets())
    quality[x] = static_cast<double>(frequent.support(x));
  PatternOrdering ordering = order_patterns(
      quality, Estimator::max_superset(), Loss::squared_error_sum());
  std::cout << "\ngreedy ordering (prefix losses):";
  for (double loss : ordering.prefix_loss) std::cout << ' ' << loss;
  std::cout << "\n";

  ChainPartition chains = partition_into_chains(closed.itemsets());
  std::cout << "\nminimum chain partition: " << chains.chains.size()
            << " chains\n";
  for (const auto& chain : chains.chains) {
    std::vector<Rat> values;
    for (const Itemset& x : chain) values.push_back(Rat(closed.support(x)));
    std::cout << "  " << encode_chain(chain, values).str() << "\n";
  }
  return 0;
}
