#pragma once

#include <array>
#include <map>
#include <vector>

#include "aifp/factors.hpp"
#include "aifp/impact.hpp"
#include "aifp/lca.hpp"
#include "aifp/usecase.hpp"

namespace aifp {

/// Distribution over the four users or frequency classes, indexed by the enum value.
using ClassDistribution = std::array<double, 4>;

struct PortfolioSpec {
  double n_use_cases{100.0};
  double genai_share{0.29};
  std::map<UseCaseType, double> type_shares;  // within each family
  std::map<ModelSize, double> model_sizes;    // genai only
  ClassDistribution genai_users{};
  ClassDistribution genai_freq{};
  ClassDistribution traditional_users{};
  ClassDistribution traditional_freq{};
  std::array<double, 4> requests_per_day{0.2, 1.0, 10.0, 50.0};  // per user, by frequency class
  double business_days{250.0};
  DatacenterProfile datacenter;

  /// Throws ValidationError with the path of the first bad field.
  void validate() const;
};

struct WeightedCluster {
  UseCaseCluster cluster;
  double weight{};  // number of use cases in the cluster
};

/// All 192 clusters weighted by n_use_cases times the product of independent marginals.
std::vector<WeightedCluster> expand_clusters(const PortfolioSpec& spec);

/// business_days * users * requests per day.
double annual_inferences(const UseCaseCluster& cluster, const PortfolioSpec& spec);

/// Per use case type multipliers applied on top of a spec.
struct PortfolioAdjustments {
  std::array<double, 6> usage{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};  // annual inferences, by UseCaseType
  ComputeScaling compute;
};

/**
 * @brief Yearly footprint of a portfolio with its (use case type, step, component, stage) cells.
 *
 * Every cell is a multiple of a per-criterion power-of-two quantum and the
 * quanta are chosen so that all partial sums stay below 2^53 of them. Any
 * partition of the cells therefore re-sums to `total` exactly, whatever the
 * order of summation.
 */
struct AnnualFootprint {
  ImpactVector total;
  std::array<ImpactGrid, 6> by_use_case{};  // indexed by UseCaseType
  double use_cases{};
  double genai_use_cases{};

  const ImpactGrid& cells(UseCaseType t) const { return by_use_case[static_cast<std::size_t>(t)]; }
  ImpactGrid grid() const;
  ImpactGrid grid(AiType family) const;

  ImpactVector of(Stage s) const;
  ImpactVector of(Step s) const;
  ImpactVector of(Component c) const;
  ImpactVector of(AiType t) const;
  ImpactVector of(UseCaseType t) const;
};

AnnualFootprint aggregate_portfolio(const PortfolioSpec& spec, const Catalog& catalog,
                                    const EmissionFactorTable& factors, const PortfolioAdjustments& adjust = {});

ImpactVector scale_to_global2000(const ImpactVector& footprint);

}  // namespace aifp
