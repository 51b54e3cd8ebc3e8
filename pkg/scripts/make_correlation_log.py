#!/usr/bin/env python3
"""Regenerate the demo correlation log fixture.

Emits one message per line (sender<TAB>text) such that counting messages
per (homograph word, context keyword) combination reproduces the shipped
correlation percentages exactly.  Run from the repository root:

    python scripts/make_correlation_log.py > src/sensebridge/data/logs/correlation_log.tsv
"""

from __future__ import annotations

# Keyword pools must mirror data/contexts.tsv.
KEYWORDS = {
    "Music": ["guitarra", "banda", "show", "concerto", "música", "palco", "ensaio", "letra"],
    "Electronic/Computer": ["computador", "internet", "sinal", "servidor", "sistema", "software", "monitor", "teclado"],
    "Vehicles": ["carro", "motor", "pneu", "oficina", "estrada", "gasolina", "volante"],
    "Sports": ["barco", "regata", "jogo", "treino", "praia", "quadra", "time", "vento"],
    "Financial": ["dinheiro", "juros", "conta", "mercado", "investimento", "ações", "crédito"],
}

# word -> (total messages, per-context assignment counts)
PLAN = {
    "bateria": (50, {"Music": 39, "Electronic/Computer": 20, "Vehicles": 16, "Sports": 1, "Financial": 0}),
    "vela": (100, {"Music": 0, "Electronic/Computer": 2, "Vehicles": 63, "Sports": 92, "Financial": 0}),
    "banco": (25, {"Music": 0, "Electronic/Computer": 20, "Vehicles": 14, "Sports": 0, "Financial": 3}),
    "bolsa": (100, {"Music": 0, "Electronic/Computer": 0, "Vehicles": 0, "Sports": 11, "Financial": 73}),
    "rede": (25, {"Music": 0, "Electronic/Computer": 23, "Vehicles": 0, "Sports": 0, "Financial": 0}),
}

SENDERS = ["ana", "rui"]


def build_lines() -> list[str]:
    lines = []
    n = 0
    for word, (total, counts) in PLAN.items():
        for i in range(total):
            tokens = ["a", word, "apareceu", "aqui"]
            for ctx, count in counts.items():
                if i < count:
                    pool = KEYWORDS[ctx]
                    tokens.append(pool[i % len(pool)])
            sender = SENDERS[n % len(SENDERS)]
            lines.append(f"{sender}\t{' '.join(tokens)}")
            n += 1
    return lines


if __name__ == "__main__":
    print("\n".join(build_lines()))
