# CLI Adapters
