"""Run the reduced-size experiment suite and list what it wrote.

Equivalent to:  tikbary run --experiment fig1 --scale desk  (and so on).
The full-size runs take minutes; swap desk_config for paper_config to get
them.
"""

from tikbary.experiments import desk_config, run

for experiment in ("fig1", "fig2", "fig3", "fig4", "fig5", "sweep"):
    print(f"== {experiment} ==")
    for path in run(desk_config(experiment)):
        print(" ", path)
