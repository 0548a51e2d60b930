#include "aifp/hardware.hpp"

#include <stdexcept>

#include "aifp/errors.hpp"

namespace aifp {

namespace {

void require_count(double v, const char* field) {
  if (!(v >= 0.0)) throw ValidationError(field, "must be a non-negative count");
}

void require_load(double v, const char* field) {
  if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(field, "load rate must lie in [0, 1]");
}

}  // namespace

void ServerConfig::validate() const {
  require_count(n_cpu, "n_cpu");
  require_count(n_gpu, "n_gpu");
  require_count(n_disk, "n_disk");
  require_count(n_ram, "n_ram");
  require_count(replication, "replication");
  require_load(load_cpu, "load_cpu");
  require_load(load_gpu, "load_gpu");
  require_load(load_disk, "load_disk");
  require_load(load_ram, "load_ram");
  for (auto [v, name] : {std::pair{max_p_cpu, "max_p_cpu"}, {min_p_cpu, "min_p_cpu"}, {max_p_gpu, "max_p_gpu"},
                         {p_disk, "p_disk"}, {p_ram, "p_ram"}, {orchestrator_overhead, "orchestrator_overhead"},
                         {gpu_overhead, "gpu_overhead"}, {disk_overhead, "disk_overhead"},
                         {ram_overhead, "ram_overhead"}}) {
    if (!(v >= 0.0)) throw ValidationError(name, "must be non-negative");
  }
  if (min_p_cpu > max_p_cpu) throw ValidationError("min_p_cpu", "exceeds max_p_cpu");
}

ServerConfig compute_server_config() {
  ServerConfig c;
  c.n_cpu = 2;
  c.load_cpu = 0.5;
  c.max_p_cpu = 240.0;
  c.min_p_cpu = 35.52;
  c.orchestrator_overhead = 0.05;
  c.n_gpu = 8;
  c.load_gpu = 0.8;
  c.max_p_gpu = 400.0;
  c.gpu_overhead = 0.05;
  c.n_disk = 8;
  c.p_disk = 18.0;
  c.load_disk = 0.8;
  c.replication = 1;
  c.disk_overhead = 0.05;
  c.n_ram = 4;
  c.load_ram = 0.5;
  c.p_ram = 8.5;
  c.ram_overhead = 0.05;
  return c;
}

ServerConfig storage_server_config() {
  ServerConfig c;
  c.n_cpu = 2;
  c.load_cpu = 0.5;
  c.max_p_cpu = 240.0;
  c.min_p_cpu = 35.52;
  c.orchestrator_overhead = 0.05;
  c.n_disk = 24;
  c.p_disk = 18.0;
  c.load_disk = 0.8;
  c.replication = 3;
  c.disk_overhead = 0.05;
  return c;
}

double server_power(const ServerConfig& c) {
  const double cpu =
      c.n_cpu * (c.min_p_cpu + c.load_cpu * (c.max_p_cpu - c.min_p_cpu)) * (1.0 + c.orchestrator_overhead);
  const double disk = c.n_disk * c.p_disk * c.load_disk * c.replication * (1.0 + c.disk_overhead);
  const double gpu = c.n_gpu * c.load_gpu * c.max_p_gpu * (1.0 + c.gpu_overhead);
  const double ram = c.n_ram * c.load_ram * c.p_ram * (1.0 + c.ram_overhead);
  return cpu + disk + gpu + ram;
}

double vgpu_power_share(double total_power, double n_vcpu, double p_vcpu, double n_vgpu) {
  if (!(n_vgpu > 0.0)) throw std::invalid_argument("vgpu_power_share: n_vgpu must be positive");
  const double residual = total_power - n_vcpu * p_vcpu;
  if (!(residual > 0.0)) throw std::invalid_argument("vgpu_power_share: no power left for vGPUs after vCPU share");
  return residual / n_vgpu;
}

}  // namespace aifp
