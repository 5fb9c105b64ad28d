#pragma once

#include "musicbox/bud.hpp"
#include "musicbox/budgen.hpp"
#include "musicbox/errors.hpp"
#include "musicbox/monoid.hpp"
#include "musicbox/morphisms.hpp"
#include "musicbox/music_ops.hpp"
#include "musicbox/pattern.hpp"
#include "musicbox/presets.hpp"
#include "musicbox/prng.hpp"
#include "musicbox/render.hpp"
#include "musicbox/scale.hpp"
#include "musicbox/text.hpp"
