"""How the death window depends on the initial entanglement.

Sweeping the superposition angle of the zero/two-excitation family shows the
trade-off: smaller alpha means less initial entanglement C(0) = |sin 2a| and
a longer stretch of zero entanglement each period.  The window closes
entirely at alpha = pi/4, where tan(alpha) reaches 1; its length follows
2*pi/G - (4/G) arcsin(sqrt(tan(alpha))).
"""

import math

import numpy as np

from doublejc import ModelParams, StateFamily, death_threshold_alpha, sweep_alpha

params = ModelParams.from_detuning(0.0, 1.0)
threshold = death_threshold_alpha()
grid = np.linspace(0.05, math.pi / 2 - 0.05, 16)

results = sweep_alpha(StateFamily.PHI_ALPHA, params, grid, 2 * math.pi, 2001)

print(f"threshold alpha* = {threshold:.5f} rad (tan = 1)\n")
print("alpha     C(0)    dead length   predicted")
for alpha, report in results:
    length = report.total_dead_length()
    if alpha < threshold:
        predicted = 2 * math.pi - 4 * math.asin(math.sqrt(math.tan(alpha)))
    else:
        predicted = 0.0
    marker = "  <- no death" if not report.has_death else ""
    print(f"{alpha:7.4f}  {report.initial_concurrence:6.4f}   {length:10.6f}   {predicted:9.6f}{marker}")

print("\nless initial entanglement -> longer disentangled stretch each period")
