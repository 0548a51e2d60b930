#include "aifp/portfolio.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "aifp/errors.hpp"

namespace aifp {

namespace {

void check_distribution(const ClassDistribution& d, const std::string& field) {
  double sum = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i]) || d[i] < 0.0 || d[i] > 1.0) {
      throw ValidationError(field + "." + std::string(to_string(static_cast<UsersClass>(i))),
                            "probability must lie in [0, 1]");
    }
    sum += d[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError(field, "distribution sums to " + std::to_string(sum));
}

template <typename Key, std::size_t N>
void check_distribution(const std::map<Key, double>& d, const std::array<Key, N>& keys, const std::string& field) {
  double sum = 0.0;
  for (auto k : keys) {
    auto it = d.find(k);
    const std::string path = field + "." + std::string(to_string(k));
    if (it == d.end()) throw ValidationError(path, "missing share");
    if (!std::isfinite(it->second) || it->second < 0.0 || it->second > 1.0) {
      throw ValidationError(path, "share must lie in [0, 1]");
    }
    sum += it->second;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError(field, "shares sum to " + std::to_string(sum));
}

}  // namespace

void PortfolioSpec::validate() const {
  if (!std::isfinite(n_use_cases) || n_use_cases < 0.0) throw ValidationError("n_use_cases", "must be >= 0");
  if (!std::isfinite(genai_share) || genai_share < 0.0 || genai_share > 1.0) {
    throw ValidationError("genai_share", "must lie in [0, 1]");
  }
  std::map<UseCaseType, double> genai;
  std::map<UseCaseType, double> traditional;
  for (const auto& [type, share] : type_shares) {
    (family_of(type) == AiType::GenAI ? genai : traditional)[type] = share;
  }
  check_distribution(genai, kGenAiTypes, "type_shares");
  check_distribution(traditional, kTraditionalTypes, "type_shares");
  check_distribution(model_sizes, kModelSizes, "model_sizes");
  check_distribution(genai_users, "users.genai");
  check_distribution(genai_freq, "frequency.genai");
  check_distribution(traditional_users, "users.traditional");
  check_distribution(traditional_freq, "frequency.traditional");
  for (std::size_t i = 0; i < requests_per_day.size(); ++i) {
    if (!std::isfinite(requests_per_day[i]) || requests_per_day[i] < 0.0) {
      throw ValidationError("requests_per_day." + std::string(to_string(static_cast<FreqClass>(i))),
                            "must be >= 0");
    }
  }
  if (!std::isfinite(business_days) || business_days < 0.0) throw ValidationError("business_days", "must be >= 0");
  try {
    datacenter.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("datacenter." + e.field(), e.message());
  }
}

std::vector<WeightedCluster> expand_clusters(const PortfolioSpec& spec) {
  spec.validate();
  std::vector<WeightedCluster> out;
  out.reserve(192);
  for (const auto& c : enumerate_clusters()) {
    const auto u = static_cast<std::size_t>(c.users);
    const auto f = static_cast<std::size_t>(c.freq);
    double w = 0.0;
    if (c.ai_type == AiType::GenAI) {
      w = spec.n_use_cases * spec.genai_share * spec.type_shares.at(c.uc_type) * spec.model_sizes.at(c.model_size) *
          spec.genai_users[u] * spec.genai_freq[f];
    } else {
      w = spec.n_use_cases * (1.0 - spec.genai_share) * spec.type_shares.at(c.uc_type) *
          spec.traditional_users[u] * spec.traditional_freq[f];
    }
    out.push_back({c, w});
  }
  return out;
}

double annual_inferences(const UseCaseCluster& cluster, const PortfolioSpec& spec) {
  return spec.business_days * users_count(cluster.users) *
         spec.requests_per_day[static_cast<std::size_t>(cluster.freq)];
}

ImpactGrid AnnualFootprint::grid() const {
  ImpactGrid g;
  for (const auto& cells : by_use_case) g += cells;
  return g;
}

ImpactGrid AnnualFootprint::grid(AiType family) const {
  ImpactGrid g;
  for (auto t : kUseCaseTypes) {
    if (family_of(t) == family) g += cells(t);
  }
  return g;
}

ImpactVector AnnualFootprint::of(Stage s) const { return grid().total(s); }
ImpactVector AnnualFootprint::of(Step s) const { return grid().total(s); }

ImpactVector AnnualFootprint::of(Component c) const {
  const ImpactGrid g = grid();
  ImpactVector sum;
  for (auto step : kSteps) {
    for (auto stage : kStages) sum += g.at(step, c, stage);
  }
  return sum;
}

ImpactVector AnnualFootprint::of(AiType t) const { return grid(t).total(); }
ImpactVector AnnualFootprint::of(UseCaseType t) const { return cells(t).total(); }

namespace {

struct Leaf {
  std::size_t uc;
  ImpactGrid grid;
};

constexpr int kMantissaHeadroom = 51;

}  // namespace

AnnualFootprint aggregate_portfolio(const PortfolioSpec& spec, const Catalog& catalog,
                                    const EmissionFactorTable& factors, const PortfolioAdjustments& adjust) {
  spec.validate();
  catalog.validate();
  factors.validate();
  const DatacenterProfile& dc = spec.datacenter;

  AnnualFootprint out;
  std::vector<Leaf> leaves;
  leaves.reserve(2 * 192);

  std::array<ImpactGrid, 6> finetune_per_use_case{};
  for (auto t : kUseCaseTypes) {
    finetune_per_use_case[static_cast<std::size_t>(t)] =
        demand_impacts(Step::FineTuning, finetuning_demand(t, catalog, factors, dc, adjust.compute), dc, factors);
  }

  for (const auto& [cluster, weight] : expand_clusters(spec)) {
    if (weight == 0.0) continue;
    const auto uc = static_cast<std::size_t>(cluster.uc_type);
    const double use_cases = weight * adjust.usage[uc];
    out.use_cases += use_cases;
    if (cluster.ai_type == AiType::GenAI) out.genai_use_cases += use_cases;

    ImpactGrid inference = demand_impacts(
        Step::Inference, inference_demand(cluster, catalog, factors, dc, adjust.compute), dc, factors);
    inference *= use_cases * annual_inferences(cluster, spec);
    leaves.push_back({uc, inference});

    ImpactGrid finetune = finetune_per_use_case[uc];
    finetune *= use_cases / catalog.lifetime_years;
    leaves.push_back({uc, finetune});
  }

  // Power-of-two quantum per criterion so that the integer total fits the mantissa.
  std::array<double, 5> quantum{};
  for (auto c : kCriteria) {
    double estimate = 0.0;
    for (const auto& leaf : leaves) {
      for (auto step : kSteps) {
        for (auto comp : kComponents) {
          for (auto stage : kStages) estimate += leaf.grid.at(step, comp, stage)[c];
        }
      }
    }
    int exp2 = 0;
    if (estimate > 0.0 && std::isfinite(estimate)) {
      std::frexp(estimate * (1.0 + 1e-9), &exp2);
    }
    quantum[static_cast<std::size_t>(c)] = std::ldexp(1.0, exp2 - kMantissaHeadroom);
  }

  std::array<std::array<std::array<std::int64_t, 5>, ImpactGrid::kCells>, 6> counts{};
  for (const auto& leaf : leaves) {
    for (auto step : kSteps) {
      for (auto comp : kComponents) {
        for (auto stage : kStages) {
          const ImpactVector& v = leaf.grid.at(step, comp, stage);
          auto& cell = counts[leaf.uc][ImpactGrid::index(step, comp, stage)];
          for (auto c : kCriteria) {
            const auto k = static_cast<std::size_t>(c);
            cell[k] += std::llround(v[c] / quantum[k]);
          }
        }
      }
    }
  }

  std::array<std::int64_t, 5> total_counts{};
  for (auto t : kUseCaseTypes) {
    const auto uc = static_cast<std::size_t>(t);
    for (auto step : kSteps) {
      for (auto comp : kComponents) {
        for (auto stage : kStages) {
          const auto& cell = counts[uc][ImpactGrid::index(step, comp, stage)];
          ImpactVector& dst = out.by_use_case[uc].at(step, comp, stage);
          for (auto c : kCriteria) {
            const auto k = static_cast<std::size_t>(c);
            dst[c] = static_cast<double>(cell[k]) * quantum[k];
            total_counts[k] += cell[k];
          }
        }
      }
    }
  }
  for (auto c : kCriteria) {
    const auto k = static_cast<std::size_t>(c);
    out.total[c] = static_cast<double>(total_counts[k]) * quantum[k];
  }
  return out;
}

ImpactVector scale_to_global2000(const ImpactVector& footprint) { return footprint * 2000.0; }

}  // namespace aifp
