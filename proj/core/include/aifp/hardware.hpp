#pragma once

namespace aifp {

/// Server bill of power. Overheads are fractions added on top of each term.
struct ServerConfig {
  double n_cpu{};
  double load_cpu{};
  double max_p_cpu{};  // W
  double min_p_cpu{};  // W
  double orchestrator_overhead{};

  double n_gpu{};
  double load_gpu{};
  double max_p_gpu{};  // W
  double gpu_overhead{};

  double n_disk{};
  double p_disk{};  // W
  double load_disk{};
  double replication{};
  double disk_overhead{};

  double n_ram{};
  double load_ram{};
  double p_ram{};  // W
  double ram_overhead{};

  /// Throws ValidationError on negative counts, loads outside [0,1] or min > max CPU power.
  void validate() const;
};

/// GPU inference node (8x A100 + 2 Xeon). Eight SSDs without replication, as listed in its BOM.
ServerConfig compute_server_config();

/// Storage node: two CPUs and 24 triple-replicated disks, no GPU or RAM term.
ServerConfig storage_server_config();

/// Wall power of a server in W, before any datacenter overhead.
double server_power(const ServerConfig& config);

/**
 * Power attributed to one vGPU once the vCPU share is removed.
 * Throws std::invalid_argument unless n_vgpu > 0 and the residual is positive.
 */
double vgpu_power_share(double total_power, double n_vcpu, double p_vcpu, double n_vgpu);

}  // namespace aifp
