#pragma once

namespace h3m {

// Selects between the OpenMP kernel and the serial reference path.
enum class Exec { Serial, Parallel };

} // namespace h3m
