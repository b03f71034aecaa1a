# Infrastructure Layer - External Concerns
