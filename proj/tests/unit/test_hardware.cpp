#include <gtest/gtest.h>

#include <stdexcept>

#include "aifp/errors.hpp"
#include "aifp/hardware.hpp"

using namespace aifp;

TEST(ServerPower, ComputeNodeByHand) {
  const double cpu = 2 * (35.52 + 0.5 * (240 - 35.52)) * 1.05;
  const double gpu = 8 * 0.8 * 400 * 1.05;
  const double disk = 8 * 18 * 0.8 * 1 * 1.05;
  const double ram = 4 * 0.5 * 8.5 * 1.05;
  EXPECT_NEAR(server_power(compute_server_config()), cpu + gpu + disk + ram, 1e-9);
  EXPECT_NEAR(server_power(compute_server_config()), 3110.0, 0.01 * 3110.0);
}

TEST(ServerPower, StorageNodeByHand) {
  const double cpu = 2 * (35.52 + 0.5 * (240 - 35.52)) * 1.05;
  const double disk = 24 * 18 * 0.8 * 3 * 1.05;
  EXPECT_NEAR(server_power(storage_server_config()), cpu + disk, 1e-9);
  EXPECT_NEAR(server_power(storage_server_config()), 1378.0, 0.01 * 1378.0);
}

TEST(ServerPower, EmptyServerIsZero) { EXPECT_EQ(server_power(ServerConfig{}), 0.0); }

TEST(ServerPower, ValidateRejectsBadConfigs) {
  auto c = compute_server_config();
  EXPECT_NO_THROW(c.validate());
  c.load_gpu = 1.5;
  EXPECT_THROW(c.validate(), ValidationError);
  c = compute_server_config();
  c.min_p_cpu = c.max_p_cpu + 1;
  EXPECT_THROW(c.validate(), ValidationError);
  c = compute_server_config();
  c.n_disk = -1;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(ServerPower, MonotoneInEveryParameter) {
  for (const ServerConfig& base : {compute_server_config(), storage_server_config()}) {
    const double p0 = server_power(base);
    for (auto field : {&ServerConfig::n_cpu, &ServerConfig::max_p_cpu, &ServerConfig::orchestrator_overhead,
                       &ServerConfig::n_gpu, &ServerConfig::max_p_gpu, &ServerConfig::gpu_overhead,
                       &ServerConfig::n_disk, &ServerConfig::p_disk, &ServerConfig::replication,
                       &ServerConfig::disk_overhead, &ServerConfig::n_ram, &ServerConfig::p_ram,
                       &ServerConfig::ram_overhead}) {
      ServerConfig c = base;
      c.*field += 0.5;
      EXPECT_GE(server_power(c), p0);
    }
    for (auto field : {&ServerConfig::load_cpu, &ServerConfig::load_gpu, &ServerConfig::load_disk,
                       &ServerConfig::load_ram}) {
      for (double load = 0.0; load <= 1.0; load += 0.125) {
        ServerConfig lo = base, hi = base;
        lo.*field = load;
        hi.*field = std::min(1.0, load + 0.125);
        EXPECT_LE(server_power(lo), server_power(hi));
      }
    }
    ServerConfig c = base;
    c.min_p_cpu = std::min(c.min_p_cpu + 10.0, c.max_p_cpu);
    EXPECT_GE(server_power(c), p0);
  }
}

TEST(VgpuShare, HandArithmetic) {
  EXPECT_NEAR(vgpu_power_share(3116.0, 96, 3.15, 56), (3116.0 - 302.4) / 56, 1e-12);
  EXPECT_NEAR(vgpu_power_share(3116.0, 96, 3.15, 56), 50.1, 0.01 * 50.1);
}

TEST(VgpuShare, NoVcpusGivesTotal) { EXPECT_EQ(vgpu_power_share(812.5, 0, 3.15, 1), 812.5); }

TEST(VgpuShare, RejectsZeroResidualAndNoVgpu) {
  EXPECT_THROW(vgpu_power_share(302.4, 96, 3.15, 56), std::invalid_argument);
  EXPECT_THROW(vgpu_power_share(100.0, 96, 3.15, 56), std::invalid_argument);
  EXPECT_THROW(vgpu_power_share(3116.0, 96, 3.15, 0), std::invalid_argument);
}
