#ifndef TOPODYN_IO_HPP
#define TOPODYN_IO_HPP

#include <string>

#include "topodyn/chaos.hpp"
#include "topodyn/finite_system.hpp"
#include "topodyn/sft.hpp"

namespace topodyn {

/// Line-oriented system file:
///
///     system <name>
///     states <n>
///     label <i> <text>
///     map <j_0> <j_1> ... <j_{n-1}>
///     metric table          # followed by n-1 lower-triangular rows
///     <d10>
///     <d20> <d21> ...
///     metric euclidean      # alternative: derive distances from coordinates
///     coord <i> <x> <y>
///     subset <name> <i> <i> ...
///     tolerance <decimal>
///     resolution <decimal>
///
/// All distances are decimal strings. '#' starts a comment.
FiniteSystem parse_system(const std::string& text);
std::string serialize_system(const FiniteSystem& sys, const std::string& name = "system");

/// SFT file:
///
///     sft <name>
///     alphabet <m>
///     edge <a> -> <b>
///     words <L>: <w> <w> ...
Sft parse_sft(const std::string& text);
std::string serialize_sft(const Sft& s, const std::string& name = "sft");

/// Self-contained certificate records: the JSON carries the presentation the
/// certificate refers to, so `verify` re-checks from the record alone.
std::string certificate_to_json(const HorseshoeCertificate& cert, const Sft& sys);
std::string certificate_to_json(const FiniteHorseshoeCertificate& cert, const FiniteSystem& sys);

struct CertificateCheck {
    bool valid = false;
    std::string kind;
    std::string detail;
};
CertificateCheck verify_certificate_json(const std::string& json_text);

std::string read_file(const std::string& path);
/// Write-then-rename so concurrent readers never see partial files.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace topodyn

#endif
