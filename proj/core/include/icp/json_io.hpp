#pragma once

#include <string>
#include <vector>

#include "icp/complex.hpp"
#include "icp/flow.hpp"
#include "icp/layout.hpp"
#include "icp/polyhedron.hpp"

namespace icp {

// Complex interchange format:
//   {"vertices": [labels],
//    "edges": [{"u": label, "v": label, "theta": w}, ...],
//    "faces": [[edge indices], ...],
//    "infinity": {"face": idx} or {"vertices": [labels]}}   (optional)
// The returned complex is finalized.
CellComplex complex_from_json(const std::string& text);
std::string complex_to_json(const CellComplex& cc);

CellComplex load_complex(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

// {"ambient": ..., "circles": [{"v": id, "cx": ..., "cy": ..., "r": ...}]}
std::string layout_to_json(const CellComplex& cc, const PatternLayout& layout);

// plane coefficients, dihedral angles and ideal vertices
std::string polyhedron_to_json(const CellComplex& cc,
                               const PolyhedronData& data);

// one row per accepted step: t, residual, energy, u_min, u_max
std::string trace_summary_csv(const FlowTrace& trace);

// one row per snapshot: t, u_0..u_{n-1}, K_0..K_{n-1}, energy, residual
std::string trace_snapshots_csv(const CellComplex& cc, const FlowTrace& trace,
                                const std::vector<double>& k_hat,
                                const std::vector<char>& free_mask);

// resolved configuration, complex hash and run outcome
std::string run_manifest_json(const CellComplex& cc, const FlowConfig& config,
                              const FlowTrace& trace,
                              const std::string& source);

}  // namespace icp
