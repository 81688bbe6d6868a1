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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "patsum/patsum.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace patsum;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIncompatible = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + out_path + "'");
  out << text;
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

json itemset_json(const Itemset& x) {
  json arr = json::array();
  for (Item a : x.items()) arr.push_back(a);
  return arr;
}

std::string header(const std::string& config) {
  return "# patsum " + std::string(kVersion) + " " + config + "\n";
}

// ---------------------------------------------------------------------------
// mine

struct MineOptions {
  std::string input;
  std::string sigma_text;
  std::string output;
  bool closed = false, free_sets = false, maximal = false, ndi = false;
  bool minimal_infreq = false, rules = false;
};

int run_mine(const MineOptions& opt) {
  Rat sigma = parse_rational(opt.sigma_text);
  TransactionDatabase db = parse_fimi(read_file(opt.input));
  if (db.empty())
    throw PreconditionError("mine requires a non-empty database");

  std::string mode = opt.closed           ? "--closed"
                     : opt.free_sets      ? "--free"
                     : opt.maximal        ? "--maximal"
                     : opt.ndi            ? "--ndi"
                     : opt.minimal_infreq ? "--minimal-infrequent"
                     : opt.rules          ? "--rules"
                                          : "";
  std::string config = "mine --sigma=" + to_string(sigma) +
                       (mode.empty() ? "" : " " + mode) +
                       " input=" + opt.input;
  std::string body;
  if (opt.closed) {
    body = to_tsv(mine_closed(db, sigma));
  } else if (opt.rules) {
    RuleSet rules = association_rules(mine_frequent(db, sigma));
    for (const AssociationRule& r : rules.rules)
      body += std::to_string(r.support) + "\t" + to_string(r.accuracy) +
              "\t" + r.body.str() + "\t" + r.head.str() + "\n";
  } else if (opt.minimal_infreq) {
    for (const Itemset& x : minimal_infrequent(db, sigma))
      body += std::to_string(support(x, db)) + "\t" + x.str() + "\n";
  } else {
    RatedCollection frequent = mine_frequent(db, sigma);
    if (opt.free_sets)
      body = to_tsv(frequent.restrict_to(free_itemsets(frequent)));
    else if (opt.maximal)
      body = to_tsv(frequent.restrict_to(maximal_of(frequent)));
    else if (opt.ndi)
      body = to_tsv(non_derivable_itemsets(frequent));
    else
      body = to_tsv(frequent);
  }
  emit(opt.output, header(config) + body);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// discretize

struct DiscretizeOptions {
  std::string input;
  std::string output;
  std::string method = "greedy";
  std::string loss = "";
  std::string eps_text;
  std::size_t k = 0;
  bool has_eps = false, has_k = false;
  std::string dump_tables;
};

std::vector<Rat> read_values(const std::string& path) {
  std::vector<Rat> values;
  std::istringstream stream(read_file(path));
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) values.push_back(parse_rational(token));
  }
  if (values.empty()) throw PreconditionError("no values in '" + path + "'");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

int run_discretize(const DiscretizeOptions& opt) {
  std::vector<Rat> values = read_values(opt.input);

  if (opt.method == "greedy") {
    // The greedy cover is comparison-based: run it on exact rationals.
    if (!opt.has_eps)
      throw PreconditionError("--method greedy requires --eps");
    if (!opt.loss.empty() && opt.loss != "maxabs")
      throw PreconditionError("--method greedy minimizes maxabs only");
    Rat eps = parse_rational(opt.eps_text);
    RatDiscretization disc = prefix_cover<Rat>(values, eps);
    std::string config = "discretize --method=greedy --loss=maxabs --eps=" +
                         to_string(eps) + " input=" + opt.input;
    std::string body;
    for (const auto& [x, d] : disc.mapping)
      body += to_string(x) + "\t" + to_string(d) + "\n";
    emit(opt.output, header(config) + "# points=" +
                         std::to_string(disc.points.size()) +
                         " maxAbsError=" + to_string(disc.max_abs_error) +
                         "\n" + body);
    return kExitOk;
  }
  if (opt.method != "dp")
    throw PreconditionError("unknown method '" + opt.method + "'");

  // The DP segmentation works on binary64 losses.
  if (!opt.has_k) throw PreconditionError("--method dp requires --k");
  if (!opt.loss.empty() && opt.loss != "sumabs")
    throw PreconditionError("--method dp minimizes sumabs only");
  std::vector<double> doubles;
  for (const Rat& v : values) doubles.push_back(to_double(v));
  std::vector<double> weights(doubles.size(), 1.0);
  ErrorMatrices m = dp_valuate_abs(doubles, weights);
  DPTables t = dp_tabulate(doubles, m);
  Discretization disc = extract_discretization(doubles, m, t, opt.k);
  std::string config = "discretize --method=dp --loss=sumabs --k=" +
                       std::to_string(opt.k) + " input=" + opt.input;
  if (!opt.dump_tables.empty()) {
    json tables;
    tables["n"] = t.n;
    tables["eps"] = m.eps;
    tables["mu"] = m.mu;
    tables["delta"] = t.delta;
    tables["omega"] = t.omega;
    std::ofstream out(opt.dump_tables, std::ios::binary);
    out << tables.dump(2) << "\n";
  }
  double loss = t.loss(opt.k - 1, doubles.size() - 1);
  std::string body;
  for (const auto& [x, d] : disc.mapping)
    body += fmt_double(x) + "\t" + fmt_double(d) + "\n";
  emit(opt.output, header(config) + "# points=" +
                       std::to_string(disc.points.size()) +
                       " loss=" + fmt_double(loss) + "\n" + body);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// order

struct OrderOptions {
  std::string input;
  std::string output;
  std::string est = "max-superset";
  std::string loss = "squared";
  double delta = 0.0;
  double p = 2.0;
  double count_eps = 0.0;
  std::string quality = "support";
  bool include_empty = false;
};

int run_order(const OrderOptions& opt) {
  RatedCollection c = parse_collection_tsv(read_file(opt.input));
  QualityMap quality;
  for (const auto& [x, supp] : c.entries())
    quality[x] = opt.quality == "frequency" ? to_double(c.frequency(x))
                                            : static_cast<double>(supp);

  Estimator est = opt.est == "zero"           ? Estimator::zero_default()
                  : opt.est == "independence" ? Estimator::independence(
                                                    opt.delta)
                                              : Estimator::max_superset();
  Loss loss = opt.loss == "l1"      ? Loss::lp(1.0)
              : opt.loss == "l2"    ? Loss::lp(2.0)
              : opt.loss == "lp"    ? Loss::lp(opt.p)
              : opt.loss == "count" ? Loss::count_exceeding(opt.count_eps)
                                    : Loss::squared_error_sum();
  loss.include_empty = opt.include_empty;

  PatternOrdering ordering = order_patterns(quality, est, loss);
  json rows = json::array();
  rows.push_back({{"rank", 0},
                  {"itemset", nullptr},
                  {"prefixLoss", ordering.prefix_loss[0]}});
  for (std::size_t i = 0; i < ordering.sequence.size(); ++i)
    rows.push_back({{"rank", i + 1},
                    {"itemset", itemset_json(ordering.sequence[i])},
                    {"prefixLoss", ordering.prefix_loss[i + 1]}});

  std::string config = "order --est=" + opt.est + " --loss=" + opt.loss +
                       " --quality=" + opt.quality + " input=" + opt.input;
  emit(opt.output, header(config) + rows.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tile

int run_tile(const std::string& input, std::size_t k,
             const std::string& output) {
  TransactionDatabase db = parse_fimi(read_file(input));
  GreedyTiling tiling = greedy_tiling(db, k);
  json rows = json::array();
  for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
    json tids = json::array();
    for (Tid tid : tiling.tiles[i].tids) tids.push_back(tid);
    rows.push_back({{"tids", tids},
                    {"items", itemset_json(tiling.tiles[i].items)},
                    {"cumulativeArea", tiling.coverage[i]}});
  }
  std::string config =
      "tile --k=" + std::to_string(k) + " input=" + input;
  emit(output, header(config) + rows.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// chain

struct ChainOptions {
  std::string input;
  std::string output;
  bool antichains = false;
  bool minimal = false;
};

int run_chain(const ChainOptions& opt) {
  RatedCollection c = parse_collection_tsv(read_file(opt.input));
  std::vector<Itemset> members = c.itemsets();

  std::string config = std::string("chain ") +
                       (opt.antichains ? "--antichains " : "") +
                       (opt.minimal ? "--minimal " : "") + "input=" +
                       opt.input;
  json out;
  if (opt.antichains) {
    AntichainPartition partition = partition_into_antichains(members);
    json list = json::array();
    for (const auto& antichain : partition.antichains) {
      json group = json::array();
      for (const Itemset& x : antichain) group.push_back(itemset_json(x));
      list.push_back(group);
    }
    out["antichains"] = list;
  } else {
    ChainPartition partition = opt.minimal
                                   ? minimal_partition_into_chains(members)
                                   : partition_into_chains(members);
    json list = json::array();
    for (const auto& chain : partition.chains) {
      std::vector<Rat> values;
      for (const Itemset& x : chain) values.push_back(Rat(c.support(x)));
      EncodedChain encoded = encode_chain(chain, values);
      json ranks = json::object();
      for (const auto& [item, rank] : encoded.item_ranks)
        ranks[std::to_string(item)] = rank;
      json value_list = json::array();
      Rat lo = values.front(), hi = values.front();
      for (const Rat& v : values) {
        value_list.push_back(to_string(v));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      list.push_back({{"encoded", ranks},
                      {"values", value_list},
                      {"minValue", to_string(lo)},
                      {"maxValue", to_string(hi)}});
    }
    out["chains"] = list;
  }
  emit(opt.output, header(config) + out.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// profile

struct ProfileOptions {
  std::string input;
  std::string output;
  std::string sigma_text;
  std::string kind = "specializing";
  std::string variant = "concise";
  std::string metric = "sum-abs";
  std::string noise = "none";
  double eps = 0.0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool cluster = false;
  std::string estimate;
  std::size_t paths = 1000;
};

template <typename V>
json profile_json(const ChangeProfile<V>& p) {
  json changes = json::array();
  for (const auto& [key, value] : p.changes) {
    json entry;
    entry["key"] = itemset_json(key);
    if constexpr (std::is_same_v<V, Rat>)
      entry["value"] = to_string(value);
    else
      entry["value"] = value;
    changes.push_back(entry);
  }
  return {{"owner", itemset_json(p.owner)},
          {"kind", p.kind == ProfileKind::kSpecializing ? "specializing"
                                                        : "generalizing"},
          {"variant",
           p.variant == ProfileVariant::kConcise ? "concise" : "simple"},
          {"changes", changes}};
}

template <typename V>
json dendrogram_json(const Dendrogram<V>& tree, std::size_t node) {
  const auto& n = tree.nodes[node];
  if (n.owner) return {{"owner", itemset_json(*n.owner)}};
  json out;
  if constexpr (std::is_same_v<V, Rat>)
    out["height"] = to_string(n.height);
  else
    out["height"] = n.height;
  out["left"] = dendrogram_json(tree, n.left);
  out["right"] = dendrogram_json(tree, n.right);
  return out;
}

int run_profile(const ProfileOptions& opt) {
  Rat sigma = parse_rational(opt.sigma_text);
  TransactionDatabase db = parse_fimi(read_file(opt.input));
  if (db.empty())
    throw PreconditionError("profile requires a non-empty database");
  RatedCollection frequent = mine_frequent(db, sigma);

  ChangeProfiles concise = change_profiles(frequent);
  ProfileMap<Rat> exact = opt.kind == "generalizing" ? concise.generalizing
                                                     : concise.specializing;
  if (opt.variant == "simple") exact = simplify_all(exact);

  ProfileMetric metric = opt.metric == "max-abs" ? ProfileMetric::kMaxAbs
                                                 : ProfileMetric::kSumAbs;
  bool noisy = opt.noise != "none";
  if (noisy && opt.kind != "specializing")
    throw PreconditionError("noise models apply to specializing profiles");

  std::string config =
      "profile --sigma=" + to_string(sigma) + " --kind=" + opt.kind +
      " --variant=" + opt.variant + " --metric=" + opt.metric +
      " --noise=" + opt.noise +
      (noisy ? " --eps=" + fmt_double(opt.eps) : "") +
      (opt.has_seed ? " --seed=" + std::to_string(opt.seed) : "") +
      (opt.cluster ? " --cluster" : "") +
      (opt.estimate.empty()
           ? ""
           : " --estimate='" + opt.estimate +
                 "' --paths=" + std::to_string(opt.paths)) +
      " input=" + opt.input;

  json out;
  ProfileMap<double> noisy_profiles;
  if (noisy)
    noisy_profiles = noisify_profiles(
        exact,
        opt.noise == "perturb"   ? NoiseModel::kPerturb
        : opt.noise == "uniform" ? NoiseModel::kUniform
                                 : NoiseModel::kGaussian,
        opt.eps, opt.seed);

  if (!opt.estimate.empty()) {
    // Estimation always runs on simple specializing profiles.
    std::istringstream fields(opt.estimate);
    std::vector<Item> items;
    std::string token;
    while (fields >> token) items.push_back(static_cast<Item>(
        std::stoul(token)));
    Itemset x(std::move(items));
    ProfileMap<Rat> simple = simplify_all(concise.specializing);
    json estimate;
    estimate["itemset"] = itemset_json(x);
    if (noisy) {
      ProfileMap<double> schs = noisify_profiles(
          simple,
          opt.noise == "perturb"   ? NoiseModel::kPerturb
          : opt.noise == "uniform" ? NoiseModel::kUniform
                                   : NoiseModel::kGaussian,
          opt.eps, opt.seed);
      estimate["dp"] = dp_from_schs(x, schs);
      estimate["sampled"] = sample_from_schs(x, schs, opt.paths, opt.seed);
    } else {
      estimate["dp"] = to_string(dp_from_schs(x, simple));
      estimate["sampled"] =
          to_string(sample_from_schs(x, simple, opt.paths, opt.seed));
    }
    estimate["paths"] = opt.paths;
    out["estimate"] = estimate;
  } else if (opt.cluster) {
    if (noisy) {
      std::vector<ChangeProfile<double>> ps;
      for (const auto& [owner, profile] : noisy_profiles)
        ps.push_back(profile);
      Dendrogram<double> tree = agglomerative_cluster(ps, metric);
      out["dendrogram"] = dendrogram_json(tree, tree.root);
    } else {
      std::vector<ChangeProfile<Rat>> ps;
      for (const auto& [owner, profile] : exact) ps.push_back(profile);
      Dendrogram<Rat> tree = agglomerative_cluster(ps, metric);
      out["dendrogram"] = dendrogram_json(tree, tree.root);
    }
  } else {
    json profiles = json::array();
    if (noisy) {
      for (const auto& [owner, profile] : noisy_profiles)
        profiles.push_back(profile_json(profile));
    } else {
      for (const auto& [owner, profile] : exact)
        profiles.push_back(profile_json(profile));
    }
    out["profiles"] = profiles;
  }
  emit(opt.output, header(config) + out.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// inverse

int run_inverse_check(const std::vector<std::string>& paths,
                      const std::string& output) {
  std::vector<Projection> ps;
  for (const std::string& path : paths)
    ps.push_back(parse_projection(read_file(path)));
  bool ok = projections_compatible(ps);
  std::string config = "inverse check";
  for (const std::string& path : paths) config += " " + path;
  emit(output, header(config) + (ok ? "compatible\n" : "incompatible\n"));
  return ok ? kExitOk : kExitIncompatible;
}

int run_inverse_reconstruct2(const std::string& path1,
                             const std::string& path2,
                             const std::string& output) {
  Projection p1 = parse_projection(read_file(path1));
  Projection p2 = parse_projection(read_file(path2));
  auto db = from_two_to_one(p1, p2);
  if (!db)
    throw IncompatibleError("projections admit no common database");
  std::string config = "inverse reconstruct2 " + path1 + " " + path2;
  emit(output, header(config) + to_fimi(*db));
  return kExitOk;
}

int run_inverse_count2(const std::string& path1, const std::string& path2,
                       const std::string& output) {
  Projection p1 = parse_projection(read_file(path1));
  Projection p2 = parse_projection(read_file(path2));
  BigInt count = count_compatible_two(p1, p2);
  std::string config = "inverse count2 " + path1 + " " + path2;
  emit(output, header(config) + count.str() + "\n");
  return kExitOk;
}

int run_inverse_brute(const std::string& path, std::size_t max_n,
                      std::size_t max_items, const std::string& output) {
  SupportClaim claim{parse_collection_tsv(read_file(path))};
  auto db = brute_force_reconstruct(claim, max_n, max_items);
  std::string config = "inverse brute --max-n=" + std::to_string(max_n) +
                       " --max-items=" + std::to_string(max_items) + " " +
                       path;
  if (!db) {
    emit(output, header(config) + "# no compatible database\n");
    return kExitOk;
  }
  emit(output, header(config) + to_fimi(*db));
  return kExitOk;
}

int run_inverse_project(const std::string& path, const std::string& onto_text,
                        const std::string& output) {
  TransactionDatabase db = parse_fimi(read_file(path));
  std::istringstream fields(onto_text);
  std::vector<Item> items;
  std::string token;
  while (fields >> token)
    items.push_back(static_cast<Item>(std::stoul(token)));
  Projection p = project(db, Itemset(std::move(items)));
  std::string config = "inverse project --onto='" + onto_text + "' " + path;
  emit(output, header(config) + to_text(p));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent-itemset mining and pattern-collection summarization"};
  app.require_subcommand(1);

  // mine
  MineOptions mine_opt;
  CLI::App* mine = app.add_subcommand("mine", "Mine frequent itemsets");
  mine->add_option("input", mine_opt.input, "FIMI transaction file")
      ->required();
  mine->add_option("--sigma", mine_opt.sigma_text,
                   "minimum frequency (p/q or decimal)")
      ->required();
  mine->add_option("--output", mine_opt.output, "output file");
  auto* closed = mine->add_flag("--closed", mine_opt.closed);
  auto* free_f = mine->add_flag("--free", mine_opt.free_sets);
  auto* maximal = mine->add_flag("--maximal", mine_opt.maximal);
  auto* ndi = mine->add_flag("--ndi", mine_opt.ndi);
  auto* minimal = mine->add_flag("--minimal-infrequent",
                                 mine_opt.minimal_infreq);
  auto* rules = mine->add_flag("--rules", mine_opt.rules);
  for (auto* a : {closed, free_f, maximal, ndi, minimal, rules})
    for (auto* b : {closed, free_f, maximal, ndi, minimal, rules})
      if (a != b) a->excludes(b);

  // discretize
  DiscretizeOptions disc_opt;
  CLI::App* disc = app.add_subcommand("discretize", "Discretize values");
  disc->add_option("input", disc_opt.input, "file of values")->required();
  disc->add_option("--output", disc_opt.output, "output file");
  disc->add_option("--method", disc_opt.method, "greedy|dp");
  disc->add_option("--loss", disc_opt.loss, "maxabs|sumabs");
  auto* eps_opt = disc->add_option("--eps", disc_opt.eps_text,
                                   "max abs error (p/q or decimal)");
  auto* k_opt = disc->add_option("--k", disc_opt.k, "point count");
  disc->add_option("--dump-tables", disc_opt.dump_tables,
                   "write DP tables as JSON");

  // order
  OrderOptions order_opt;
  CLI::App* order = app.add_subcommand("order", "Greedy pattern ordering");
  order->add_option("input", order_opt.input, "collection TSV")->required();
  order->add_option("--output", order_opt.output, "output file");
  order->add_option("--est", order_opt.est,
                    "max-superset|zero|independence");
  order->add_option("--delta", order_opt.delta,
                    "default frequency for independence");
  order->add_option("--loss", order_opt.loss, "squared|l1|l2|lp|count");
  order->add_option("--p", order_opt.p, "exponent for --loss lp");
  order->add_option("--count-eps", order_opt.count_eps,
                    "threshold for --loss count");
  order->add_option("--quality", order_opt.quality, "support|frequency");
  order->add_flag("--include-empty", order_opt.include_empty);

  // tile
  std::string tile_input, tile_output;
  std::size_t tile_k = 0;
  CLI::App* tile = app.add_subcommand("tile", "Greedy database tiling");
  tile->add_option("input", tile_input, "FIMI transaction file")->required();
  tile->add_option("--k", tile_k, "number of tiles")->required();
  tile->add_option("--output", tile_output, "output file");

  // chain
  ChainOptions chain_opt;
  CLI::App* chain = app.add_subcommand("chain", "Chain/antichain partitions");
  chain->add_option("input", chain_opt.input, "collection TSV")->required();
  chain->add_option("--output", chain_opt.output, "output file");
  chain->add_flag("--antichains", chain_opt.antichains);
  chain->add_flag("--minimal", chain_opt.minimal);

  // profile
  ProfileOptions profile_opt;
  CLI::App* profile = app.add_subcommand("profile", "Change profiles");
  profile->add_option("input", profile_opt.input, "FIMI transaction file")
      ->required();
  profile->add_option("--sigma", profile_opt.sigma_text, "minimum frequency")
      ->required();
  profile->add_option("--output", profile_opt.output, "output file");
  profile->add_option("--kind", profile_opt.kind,
                      "specializing|generalizing");
  profile->add_option("--variant", profile_opt.variant, "concise|simple");
  profile->add_option("--metric", profile_opt.metric, "sum-abs|max-abs");
  auto* noise_opt =
      profile->add_option("--noise", profile_opt.noise,
                          "none|perturb|uniform|gaussian");
  profile->add_option("--eps", profile_opt.eps, "noise level");
  auto* seed_opt = profile->add_option("--seed", profile_opt.seed, "RNG seed");
  profile->add_flag("--cluster", profile_opt.cluster,
                    "emit the average-linkage dendrogram");
  auto* estimate_opt = profile->add_option(
      "--estimate", profile_opt.estimate, "itemset whose frequency to "
                                          "estimate, e.g. '0 1 2'");
  profile->add_option("--paths", profile_opt.paths, "sample path count");
  estimate_opt->needs(seed_opt);

  // inverse
  CLI::App* inverse = app.add_subcommand("inverse", "Inverse mining");
  inverse->require_subcommand(1);
  std::vector<std::string> check_paths;
  std::string inv_output;
  CLI::App* check = inverse->add_subcommand("check",
                                            "pairwise compatibility");
  check->add_option("projections", check_paths, "projection files")
      ->required()
      ->expected(-2);
  check->add_option("--output", inv_output, "output file");

  std::string rec_p1, rec_p2;
  CLI::App* rec2 = inverse->add_subcommand(
      "reconstruct2", "database from two projections");
  rec2->add_option("p1", rec_p1, "projection file")->required();
  rec2->add_option("p2", rec_p2, "projection file")->required();
  rec2->add_option("--output", inv_output, "output file");

  std::string cnt_p1, cnt_p2;
  CLI::App* count2 = inverse->add_subcommand(
      "count2", "count databases compatible with two projections");
  count2->add_option("p1", cnt_p1, "projection file")->required();
  count2->add_option("p2", cnt_p2, "projection file")->required();
  count2->add_option("--output", inv_output, "output file");

  std::string brute_path;
  std::size_t brute_max_n = 8, brute_max_items = 6;
  CLI::App* brute = inverse->add_subcommand(
      "brute", "exhaustive reconstruction from a support claim");
  brute->add_option("claim", brute_path, "collection TSV")->required();
  brute->add_option("--max-n", brute_max_n, "transaction guard");
  brute->add_option("--max-items", brute_max_items, "item guard");
  brute->add_option("--output", inv_output, "output file");

  std::string project_path, project_onto;
  CLI::App* proj = inverse->add_subcommand(
      "project", "project a database onto an itemset");
  proj->add_option("input", project_path, "FIMI transaction file")
      ->required();
  proj->add_option("--onto", project_onto, "items, e.g. '0 1'")->required();
  proj->add_option("--output", inv_output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  disc_opt.has_eps = eps_opt->count() > 0;
  disc_opt.has_k = k_opt->count() > 0;
  profile_opt.has_seed = seed_opt->count() > 0;
  if (noise_opt->count() > 0 && profile_opt.noise != "none" &&
      !profile_opt.has_seed) {
    std::cerr << "--noise requires --seed\n";
    return kExitParse;
  }

  try {
    if (mine->parsed()) return run_mine(mine_opt);
    if (disc->parsed()) return run_discretize(disc_opt);
    if (order->parsed()) return run_order(order_opt);
    if (tile->parsed()) return run_tile(tile_input, tile_k, tile_output);
    if (chain->parsed()) return run_chain(chain_opt);
    if (profile->parsed()) return run_profile(profile_opt);
    if (inverse->parsed()) {
      if (check->parsed()) return run_inverse_check(check_paths, inv_output);
      if (rec2->parsed())
        return run_inverse_reconstruct2(rec_p1, rec_p2, inv_output);
      if (count2->parsed())
        return run_inverse_count2(cnt_p1, cnt_p2, inv_output);
      if (brute->parsed())
        return run_inverse_brute(brute_path, brute_max_n, brute_max_items,
                                 inv_output);
      if (proj->parsed())
        return run_inverse_project(project_path, project_onto, inv_output);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IncompatibleError& e) {
    std::cerr << "incompatible inputs: " << e.what() << "\n";
    return kExitIncompatible;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
