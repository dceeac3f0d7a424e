#pragma once

#include "sl3/apartment.hpp"

#include <string>

namespace sl3 {

/// SVG of the modified sector in the window: chamber edges, inserted
/// barycenters, h labels on lattice vertices, and flat edges drawn as
/// <line class="flat" data-edge="(a,b)-(c,d)">. Pure integer coordinates
/// inside one scaling group, so the output is byte-stable.
std::string render_sector(const Window& w);

/// Throws std::runtime_error if the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sl3
