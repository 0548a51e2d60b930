#pragma once

#include "aifp/factors.hpp"
#include "aifp/portfolio.hpp"
#include "aifp/usecase.hpp"

namespace aifp {

/// Per-capacity power and embodied rows, grid rows for US/CN/EU27 and the EU water-supply row.
EmissionFactorTable default_factors();

/// Llama 3.1 8B/70B/405B serving profiles, chat/RAG/agent workloads and traditional tasks.
Catalog default_catalog();

/// 100 use cases, 29% generative, 250 business days, datacenter blend US .45 / EU27 .28 / CN .27.
PortfolioSpec default_portfolio();

}  // namespace aifp
