"""Exact and numerical tools for quantized twistor-type algebras.

Submodules: ``wick`` (normal-ordered Wick algebra), ``moyal`` (constant
bracket star products), ``fockrep`` (truncated Fock matrices), ``nctorus``
(theta-deformed torus and three-sphere), ``fuzzy`` (fuzzy spheres),
``hochschild`` (cochains, cohomology, deformations), ``glue`` (diagrams of
algebras and the normal-crossing model) and ``cli``.
"""

__version__ = "0.1.0"
