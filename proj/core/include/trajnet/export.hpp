#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trajnet/corpus.hpp"
#include "trajnet/diffusion.hpp"
#include "trajnet/honet.hpp"
#include "trajnet/mixing.hpp"
#include "trajnet/moselect.hpp"
#include "trajnet/motifs.hpp"
#include "trajnet/netstats.hpp"

namespace trajnet::io {

using nlohmann::json;

/// A double rounded to 12 significant digits; non-finite values become the
/// strings "inf", "-inf" and "nan".
json number(double x);
json number(const std::optional<double>& x);

/// Serializes with two-space indentation and a trailing newline. Object keys
/// come out in lexicographic order.
std::string dump(const json& j);

json to_json(const CorpusStats& st);
json to_json(const std::vector<RankedPath>& paths);
json to_json(const HigherOrderNetwork& net);
json to_json(const TopologyReport& r);
json to_json(const OrderTestResult& r);
json to_json(const MixingReport& r);
json to_json(const KlReport& r);
json to_json(const std::vector<MotifRow>& rows);
json to_json(const DiffusionTrace& tr);

/// DOT digraph; k-tuple nodes are labelled by joining with '|'.
std::string to_dot(const HigherOrderNetwork& net);

/// `motif,class,p_emp,p_1,p_2` with the motif written as X|Y|Z.
void write_rank_csv(std::ostream& out, const std::vector<MotifRow>& rows);

/// Side-by-side empirical and Markovian traces for alluvial plots. Throws
/// Error if the traces differ in source or step count.
json alluvial_export(const DiffusionTrace& empirical, const DiffusionTrace& markovian);

}  // namespace trajnet::io
