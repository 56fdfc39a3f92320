#pragma once

// Convenience umbrella for the whole library.

#include "bandlink/braid.hpp"
#include "bandlink/chords.hpp"
#include "bandlink/classifier.hpp"
#include "bandlink/diagram.hpp"
#include "bandlink/errors.hpp"
#include "bandlink/escalate.hpp"
#include "bandlink/milnor.hpp"
#include "bandlink/pd_io.hpp"
#include "bandlink/reidemeister.hpp"
#include "bandlink/series.hpp"
#include "bandlink/wirtinger.hpp"
