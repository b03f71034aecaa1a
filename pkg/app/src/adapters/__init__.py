# Adapters Layer - Interface Adapters
