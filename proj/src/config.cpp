#include "qdtough/config.hpp"

#include "qdtough/error.hpp"

namespace qdtough {

void RunConfig::validate() const {
  if (!(residual_tol > 0.0) || !(strict_margin > 0.0) || !(verdict_band > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (oracle_cap < 4) throw Error(ErrorKind::InvalidArgument, "oracle cap must be at least 4");
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "worker count must be positive");
  if (format != "json" && format != "table") throw Error(ErrorKind::InvalidArgument, "format must be json or table");
}

PerronOptions RunConfig::perron() const {
  PerronOptions p;
  p.residual_tol = residual_tol;
  return p;
}

CertOptions RunConfig::cert() const {
  CertOptions c;
  c.band = verdict_band;
  c.perron = perron();
  return c;
}

OracleOptions RunConfig::oracle() const {
  OracleOptions o;
  o.max_order = oracle_cap;
  return o;
}

}  // namespace qdtough
