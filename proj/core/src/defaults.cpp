#include "aifp/defaults.hpp"

namespace aifp {

EmissionFactorTable default_factors() {
  EmissionFactorTable t;
  t.version = "2024.1";
  t.at(Capacity::VcpuHour) = {3.15, {0.0, 1.67e-4, 5.34e-5, 2.49e-3, 3.85e-8}};
  t.at(Capacity::VgpuHour) = {50.1, {0.0, 1.93e-3, 6.59e-4, 2.85e-2, 9.84e-9}};
  t.at(Capacity::StorageGbHour) = {1.25e-3, {0.0, 1.11e-6, 4.81e-7, 4.95e-6, 1.31e-11}};
  t.at(Capacity::NetworkGb) = {3.42e-2, {0.0, 3.65e-4, 1.17e-4, 5.65e-3, 5.85e-8}};
  t.grid[Region::US] = {5.47e-1, 1.86e-2, 11.6, 2.21e-8};
  t.grid[Region::CN] = {8.71e-1, 3.82e-2, 15.6, 1.12e-8};
  t.grid[Region::EU27] = {4.10e-1, 1.36e-2, 12.5, 2.97e-8};
  t.water_supply = {5.84e-4, 4.31e-2, 2.42e-3, 6.28e-10};
  return t;
}

Catalog default_catalog() {
  Catalog c;
  c.version = "2024.1";
  c.models[ModelSize::Low] = {"Llama 3.1 8B", 8.0, 0.26, 127.0, 0.29, 124.3};
  c.models[ModelSize::Medium] = {"Llama 3.1 70B", 70.0, 0.36, 43.4, 0.43, 44.0};
  c.models[ModelSize::High] = {"Llama 3.1 405B", 405.0, 0.60, 21.9, 0.91, 21.7};

  c.workloads[UseCaseType::Chat] = {126.89, 208.45, 1.0, 0.0, 1.0, false};
  c.workloads[UseCaseType::Rag] = {5333.0, 363.0, 1.0, 1.0, 1.0, true};
  c.workloads[UseCaseType::Agents] = {405.65, 390.93, 3.03, 3.03, 2.0, false};

  c.traditional[UseCaseType::Tabular] = {2.99e-8, 1e-7, 1.0};
  c.traditional[UseCaseType::ComputerVision] = {2.58e-5, 6.22e-3, 0.0409};
  c.traditional[UseCaseType::Nlp] = {3.6e-6, 2e-6, 0.0409};

  FineTuningPlan tabular;
  tabular.runs = 1500;
  tabular.epochs = 1;
  tabular.samples = 1;
  tabular.batch_size = 1;
  tabular.passes = 1;
  tabular.step_energy = 1.3333e-3;
  tabular.dataset_gb = 0.02;
  tabular.storage_hours = 35.83;
  tabular.downloads = 5;
  c.fine_tuning[UseCaseType::Tabular] = tabular;

  FineTuningPlan cv;
  cv.runs = 15;
  cv.epochs = 50;
  cv.samples = 10000;
  cv.batch_size = 16;
  cv.passes = 2;
  cv.dataset_gb = 124.0;
  cv.storage_hours = 18.06;
  cv.downloads = 5;
  c.fine_tuning[UseCaseType::ComputerVision] = cv;

  FineTuningPlan nlp;
  nlp.runs = 20;
  nlp.epochs = 30;
  nlp.samples = 3750;
  nlp.batch_size = 16;
  nlp.passes = 2;
  nlp.dataset_gb = 0.021;
  nlp.storage_hours = 0.775;
  nlp.downloads = 5;
  c.fine_tuning[UseCaseType::Nlp] = nlp;
  return c;
}

PortfolioSpec default_portfolio() {
  PortfolioSpec p;
  p.n_use_cases = 100.0;
  p.genai_share = 0.29;
  p.type_shares = {{UseCaseType::Chat, 0.28},    {UseCaseType::Rag, 0.39},
                   {UseCaseType::Agents, 0.33},  {UseCaseType::Tabular, 0.79},
                   {UseCaseType::ComputerVision, 0.11}, {UseCaseType::Nlp, 0.10}};
  p.model_sizes = {{ModelSize::Low, 0.131}, {ModelSize::Medium, 0.011}, {ModelSize::High, 0.858}};
  p.genai_users = {0.10, 0.40, 0.30, 0.20};
  p.genai_freq = {0.35, 0.40, 0.20, 0.05};
  p.traditional_users = {0.80, 0.15, 0.05, 0.0};
  p.traditional_freq = {0.25, 0.25, 0.25, 0.25};
  p.requests_per_day = {0.2, 1.0, 10.0, 50.0};
  p.business_days = 250.0;
  p.datacenter.pue = 1.15;
  p.datacenter.wue = 0.18;
  p.datacenter.region_weights = {{Region::US, 0.45}, {Region::EU27, 0.28}, {Region::CN, 0.27}};
  return p;
}

}  // namespace aifp
